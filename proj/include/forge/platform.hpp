#pragma once

#include <array>
#include <vector>

#include "forge/design.hpp"
#include "forge/prop.hpp"

namespace forge {

// Bohr magneton over Planck constant, GHz per tesla.
inline constexpr double kMuBOverH_GHzPerT = 13.996245;

// Three-spin A-B-A nanomagnet unit. Couplings and frequencies are angular
// (rad/s); J = j_par/4 sets the simulation unit of energy.
struct NanomagnetParams {
  std::array<double, 3> g_a{14.2, 3.2, 0.5};
  std::array<double, 3> g_b{9.3, 6.4, 4.0};
  double b_z_tesla = 0.2;
  double j_par = 0.0;   // rad/s
  double j_perp = 0.0;  // rad/s; defaults to j_par/2 via make()
  double omega = 0.0;   // rad/s drive detuning

  static NanomagnetParams make(std::array<double, 3> g_a, std::array<double, 3> g_b,
                               double b_z_tesla, double j_par_over_2pi_ghz,
                               double omega_over_j);

  double coupling_j() const { return j_par / 4.0; }  // rad/s
  double omega_over_j() const { return omega / coupling_j(); }
  double larmor(int site) const;  // rad/s, sites 1..3 (A B A)
  // |(g_A^z - g_B^z) mu_B B_z| / |J_perp|; flip-flop suppression wants >> 1.
  double detuning_ratio() const;
};

// Oscillating-field amplitudes in gauss.
struct FieldAmplitudes {
  double b0x = 0.0, b1x = 0.0, b2x = 0.0;
  double b0y = 0.0, b1y = 0.0, b2y = 0.0;
};

// B0 = 2*hbar*f0/(g_B*mu_B), B1,2 = hbar*f1,2/(g_B*mu_B); f in units of omega.
FieldAmplitudes nanomagnet_fields(const NanomagnetParams& np, double f0_over_omega,
                                  double f1_over_omega, double f2_over_omega);

// Inverse mapping, for the unit round trip.
std::array<double, 3> drive_from_fields(const NanomagnetParams& np,
                                        const FieldAmplitudes& fa);

struct SuperconductingReport {
  double j_mhz = 0.0;
  double omega_mhz = 0.0;
  double j_zxz_mhz = 0.0;            // |c_zxz| * J
  std::array<double, 3> amplitudes_mhz{};  // f0, f1, f2 tone amplitudes
  double max_amplitude_mhz = 0.0;
  double stroboscopic_period_2t_ns = 0.0;
  double tau_c_us = 0.0;
  double tau_c_over_2t = 0.0;
  double strong_coupling_fom = 0.0;  // tau_c * |J_zxz| (cycles)
};

SuperconductingReport superconducting_map(double j_mhz, double omega_over_j,
                                          const DriveProtocol& p, double tau_c_us = 20.0);

// Larmor frequencies snapped to integer multiples of omega so the driven
// Hamiltonian is strictly T-periodic; [0] applies to the A sites, [1] to B.
struct LarmorSnap {
  std::array<int, 2> multiples{};
  double product_tesla = 0.0;  // (g_B^z - g_A^z) B_z after the snap
};

LarmorSnap snapped_larmor(const NanomagnetParams& np);

// Lab-frame Hamiltonian in units of J: Zeeman + Ising + flip-flop plus the
// x-y drive tones. include_crosstalk=false drops the g_A-proportional drive
// terms on sites 1 and 3.
TimeDependentHamiltonian lab_frame_hamiltonian(const NanomagnetParams& np,
                                               const FieldAmplitudes& fa,
                                               bool include_crosstalk);

// Exact frame change generated by sum_k (M_k omega/2) Z_k: subtracts the
// Zeeman part and rotates every remaining term, leaving integer-harmonic
// cosine/sine profiles.
TimeDependentHamiltonian interaction_picture(const TimeDependentHamiltonian& h,
                                             const std::array<int, 2>& multiples,
                                             double omega);

// Drops driven terms oscillating at |k| >= k_min.
TimeDependentHamiltonian discard_fast_terms(const TimeDependentHamiltonian& h,
                                            int k_min);

struct CrosstalkPoint {
  double product_tesla = 0.0;
  double g_bz = 0.0;
  double distance = 0.0;
  bool ratio_warning = false;  // detuning/J_perp ratio below 50
};

// Sweep of g_B^z at fixed B_z: D = |1 - tr(H H0)/tr(H0^2)| between effective
// Hamiltonians extracted with and without drive crosstalk, both in the
// interaction picture over one period.
std::vector<CrosstalkPoint> crosstalk_distance(const NanomagnetParams& base,
                                               const std::vector<double>& g_bz_values,
                                               double f0_over_omega,
                                               double f1_over_omega,
                                               double f2_over_omega,
                                               const StepControl& sc);

}  // namespace forge
