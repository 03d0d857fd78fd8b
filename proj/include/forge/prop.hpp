#pragma once

#include <vector>

#include <Eigen/Dense>

#include "forge/pauli.hpp"

namespace forge {

inline double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Smoothstep ramp with three vanishing derivatives at both ends:
// r(0)=0, r(1)=1, r',r'',r''' = 0 at s=0 and s=1.
double ramp_r(double s);
double ramp_r_d1(double s);
double ramp_r_d2(double s);
double ramp_r_d3(double s);

// Scalar time profile from a closed vocabulary. cosine/sine oscillate at
// k*omega; the delta pulse is realized as a square pulse of width `width`
// and height area/width; ramped_drive interpolates a static unit field
// into the Fourier drive f(t) = f0 + f1 cos(wt) + f2 cos(2wt) over [0, t_f].
struct TimeProfile {
  enum class Kind { constant, cosine, sine, delta_pulse, ramped_drive };

  Kind kind = Kind::constant;
  int harmonic = 0;
  double omega = 0.0;
  double t0 = 0.0, area = 0.0, width = 0.0;
  double t_f = 0.0, f0 = 0.0, f1 = 0.0, f2 = 0.0;

  static TimeProfile constant();
  static TimeProfile cosine(int k, double omega);
  static TimeProfile sine(int k, double omega);
  static TimeProfile delta_pulse(double t0, double area, double width);
  static TimeProfile ramped_drive(double t_f, double omega, double f0, double f1,
                                  double f2);

  double eval(double t) const;
  // True when the profile repeats with period T = 2*pi/omega.
  bool periodic() const { return kind == Kind::constant || kind == Kind::cosine ||
                                 kind == Kind::sine; }
  int max_harmonic() const;
  // Appends discontinuity times inside (ta, tb).
  void append_breakpoints(double ta, double tb, std::vector<double>& out) const;
};

struct DrivenTerm {
  PauliSum op;
  TimeProfile profile;
  double amplitude = 1.0;
};

// Static PauliSum plus (PauliSum, profile, amplitude) drives; all parts
// Hermitian and of equal qubit count. Immutable after construction.
class TimeDependentHamiltonian {
 public:
  TimeDependentHamiltonian(PauliSum static_part, std::vector<DrivenTerm> driven);

  int n() const { return static_.n(); }
  const PauliSum& static_part() const { return static_; }
  const std::vector<DrivenTerm>& driven() const { return driven_; }

  // Common base angular frequency of the oscillatory profiles (0 if none).
  double base_omega() const { return base_omega_; }
  int max_harmonic() const { return max_harmonic_; }
  double period() const;  // 2*pi/base_omega; throws if no oscillatory profile

  Eigen::MatrixXcd matrix_at(double t, int n_cap = 12) const;

 private:
  PauliSum static_;
  std::vector<DrivenTerm> driven_;
  double base_omega_ = 0.0;
  int max_harmonic_ = 0;
};

// Integration control for evolve(): initial steps per base period plus the
// halving refinement that stops once successive Richardson extrapolants
// agree below refine_tol.
struct StepControl {
  int steps_per_period = 256;
  double refine_tol = 1e-12;
  int max_refinements = 6;

  void validate() const;
};

// exp(-i*H*t) of a Hermitian matrix via eigendecomposition.
Eigen::MatrixXcd exp_hermitian(const Eigen::MatrixXcd& h, double t);

// Principal Hermitian logarithm: returns H with exp(-i*H*T) = U and all
// eigenphases of U taken in (-pi, pi]. Throws branch_error when a phase is
// within 1e-6 of the cut.
Eigen::MatrixXcd log_unitary(const Eigen::MatrixXcd& u, double period);

// Time-ordered propagator over [t0, t1] by midpoint-sampled exponential
// stepping with Richardson-style self-refinement.
Eigen::MatrixXcd evolve(const TimeDependentHamiltonian& h, double t0, double t1,
                        const StepControl& sc);

// Same scheme applied to a state vector (renormalized on return).
Eigen::VectorXcd evolve_state(const TimeDependentHamiltonian& h,
                              const Eigen::VectorXcd& psi, double t0, double t1,
                              const StepControl& sc);

}  // namespace forge
