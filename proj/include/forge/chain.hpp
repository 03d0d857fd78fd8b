#pragma once

#include <vector>

#include "forge/design.hpp"
#include "forge/prop.hpp"

namespace forge {

enum class Boundary { open, periodic };
enum class Coupling { ising_zz, xy };
enum class Parity { even, odd };

struct ChainSpec {
  int n_sites = 6;
  Boundary boundary = Boundary::periodic;
  Coupling coupling = Coupling::ising_zz;
  double j = 1.0;
};

// Sites of the given parity that may act as drive centers: every site on a
// ring, interior sites only on an open chain.
std::vector<int> drive_centers(const ChainSpec& spec, Parity parity);

// Static chain coupling (Ising ZZ or XY) for the given boundary.
PauliSum chain_coupling(const ChainSpec& spec);

// Sum of Z_{k-1} X_k Z_{k+1} over the valid centers, weight j_zxz.
PauliSum zxz_hamiltonian(int n_sites, Boundary boundary, double j_zxz);

// One digital step: the full static chain plus f(t) X_k on each drive
// center of the given parity.
TimeDependentHamiltonian build_step(const ChainSpec& spec, Parity parity,
                                    const DriveProtocol& p);

// An ordered list of driven periods, repeated m times.
struct DigitalStep {
  Parity parity;
  DriveProtocol protocol;
  double duration = 0.0;
};

struct DigitalSchedule {
  std::vector<DigitalStep> steps;
  int repetitions = 1;
};

// (prod_j exp(-i H_j t/m))^m.
Eigen::MatrixXcd trotter(const std::vector<PauliSum>& h_list, double t, int m);

// One even+odd cycle of the driven chain and its stroboscopic target
// exp(-i c_zxz * sum_k ZXZ * T), which equals the cycle exactly up to the
// Floquet engineering residuals.
struct CycleOperators {
  Eigen::MatrixXcd u_cycle;
  Eigen::MatrixXcd u_target;
  double period = 0.0;  // duration of one step, T
  DigitalSchedule schedule;
};

CycleOperators chain_cycle(const ChainSpec& spec, const DriveProtocol& p,
                           const StepControl& sc = {});

// Max-norm distance between cycles repetitions of the digital drive and the
// matching stroboscopic target.
double stroboscopic_error(const ChainSpec& spec, const DriveProtocol& p, int cycles,
                          const StepControl& sc = {});

// CZ on every ring edge applied to |+...+>, largest amplitude rotated to
// the positive real axis.
Eigen::VectorXcd cluster_state(int n);

struct RampSpec {
  double tf_over_t = 300.0;  // total ramp time in units of the drive period
};

// What the idle sublattice sees while the drive ramps in.
enum class InactiveField { ramped_x, none };

// Adiabatic cluster-state preparation on a ring: start in the ground state
// of sum_k [X_k + Z_k Z_{k+1}], ramp the alternating drive in over t_f, and
// return |<c|psi(t_f)>|^2.
double adiabatic_prepare(const DriveProtocol& p, const RampSpec& ramp,
                         const StepControl& sc = {},
                         InactiveField inactive = InactiveField::ramped_x,
                         int n_sites = 6);

// Z drives of the XY-chain demo, in units of omega: static edge amplitudes
// and the three-component center waveform.
struct XYDriveParams {
  double f_edge = 0.0;
  double f_center0 = 0.0, f_center1 = 0.0, f_center2 = 0.0;
  double omega_over_j = 5.0;
};

struct XYDemoResult {
  PauliSum chart{4};          // effective Hamiltonian of U(2T) over 2T, no identity term
  double d_decoupling = 0.0;  // relative distance at the given h
  double j_eff = 0.0;         // mean of the four target three-body coefficients
  double min_target = 0.0;    // smallest |target| coefficient
  double max_undesired = 0.0;
};

// Two-step digital sequence on an open XY 4-chain; h_over_omega must be an
// integer so the decoupling field winds trivially over one period.
XYDemoResult xy_digital(const ChainSpec& spec, const XYDriveParams& params,
                        double h_over_omega, const StepControl& sc = {});

// Distance D between the first-step effective Hamiltonian with spin 4
// decoupled by h Z_4 and the ideal one with the (3,4) bond removed.
double xy_decoupling_distance(const ChainSpec& spec, const XYDriveParams& params,
                              double h_over_omega, const StepControl& sc = {});

}  // namespace forge
