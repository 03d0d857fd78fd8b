#pragma once

#include <array>
#include <vector>

#include "forge/floquet.hpp"
#include "forge/nelder_mead.hpp"
#include "forge/prop.hpp"

namespace forge {

// Periodic control waveform f(t) = f0 + sum_j f_j cos(2*pi*j*t/T) acting as
// f(t)*X on the assigned sites. Cosine-only, so f is symmetric about T/2.
// Amplitudes are stored in units of omega; omega in units of J.
struct DriveProtocol {
  double omega_over_j = 0.0;
  double f0_over_omega = 0.0;               // = -c_target/omega
  std::vector<double> harmonics_over_omega;  // f1, f2, ...
  std::vector<int> sites;                    // 1-based drive centers

  static DriveProtocol for_target(double omega_over_j, double c_target_over_j,
                                  std::vector<double> harmonics_over_omega,
                                  std::vector<int> sites = {2});

  double omega() const { return omega_over_j; }  // J = 1 units
  double period() const;
  double c_target_over_j() const { return -f0_over_omega * omega_over_j; }
  double f_eval(double t) const;  // in units of J
  // (profile, amplitude-in-J) pairs for the waveform.
  std::vector<std::pair<TimeProfile, double>> profiles() const;
};

// The three conditioned central-spin Hamiltonians f(t)X +/- 2JZ and f(t)X.
struct ReducedProblem {
  TimeDependentHamiltonian h_plus, h_minus, h_zero;
};

ReducedProblem reduce(double j, const DriveProtocol& p);

// Generator coefficients of U = exp(-i(ax X + ay Y + az Z)), principal
// rotation angle in [0, pi). Throws branch_error within 1e-6 of pi.
std::array<double, 3> su2_extract(const Eigen::Matrix2cd& u);

struct ObjectiveValue {
  double value = 0.0;  // d_x^2 + d_z^2
  double d_x = 0.0, d_z = 0.0;
};

// Propagates H_+ over one period and measures the defect of
// U_+(T) = exp(-i c_target X T). Amplitudes in units of omega.
ObjectiveValue objective(double f1_over_omega, double f2_over_omega,
                         double omega_over_j, double c_target_over_j,
                         const StepControl& sc = {});

struct OptimizationResult {
  DriveProtocol protocol;
  double objective = 0.0;
  double d_x = 0.0, d_z = 0.0;
  long evaluations = 0;
  bool converged = false;  // objective < 1e-16 reached
};

inline constexpr double kObjectiveSuccess = 1e-16;

// Multi-start Nelder-Mead over (f1, f2). Seeds run concurrently; ties are
// broken by lexicographic (f1, f2) so the result is deterministic.
OptimizationResult optimize(double omega_over_j, double c_target_over_j,
                            const std::vector<std::array<double, 2>>& seeds,
                            const StepControl& sc = {},
                            const NelderMeadOptions& nm = {});

// 5x5 grid over [-3, 3]^2 in units of omega.
std::vector<std::array<double, 2>> default_seed_grid();

struct RobustnessPoint {
  double eps1 = 0.0, eps2 = 0.0;
  double abs_cx = 0.0, abs_czz = 0.0;
};

// Full 3-spin effective Hamiltonian with f1 -> f1(1+eps1), f2 -> f2(1+eps2).
std::vector<RobustnessPoint> robustness_scan(const DriveProtocol& p,
                                             const std::vector<double>& eps1,
                                             const std::vector<double>& eps2,
                                             const StepControl& sc = {});

std::vector<double> log_spaced(double lo, double hi, int points);

// Spin-echo delta-pulse solution at T = pi/J: analytically
// U_+/- = exp(+i lambda X), U_0 = exp(-i lambda X); numerically the pulse is
// a square of width T*width_frac.
struct EchoResult {
  Eigen::Matrix2cd analytic_plus, analytic_zero, analytic_minus;
  Eigen::Matrix2cd numeric_plus, numeric_zero, numeric_minus;
  double max_diff = 0.0;
};

EchoResult echo_oracle(double j, double lambda, double width_frac = 1e-4);

}  // namespace forge
