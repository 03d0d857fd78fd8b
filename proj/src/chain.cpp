#include "forge/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "forge/errors.hpp"
#include "forge/parallel.hpp"

namespace forge {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int wrap_site(int k, int n) { return ((k - 1) % n + n) % n + 1; }

std::string single_site(int n, int site, char letter) {
  std::string s(static_cast<std::size_t>(n), 'I');
  s[site - 1] = letter;
  return s;
}

std::string zxz_string(int n, int center, Boundary boundary) {
  std::string s(static_cast<std::size_t>(n), 'I');
  int left = boundary == Boundary::periodic ? wrap_site(center - 1, n) : center - 1;
  int right = boundary == Boundary::periodic ? wrap_site(center + 1, n) : center + 1;
  s[left - 1] = 'Z';
  s[center - 1] = 'X';
  s[right - 1] = 'Z';
  return s;
}

}  // namespace

std::vector<int> drive_centers(const ChainSpec& spec, Parity parity) {
  if (spec.n_sites < 3) throw std::invalid_argument("chain needs at least 3 sites");
  int lo = spec.boundary == Boundary::periodic ? 1 : 2;
  int hi = spec.boundary == Boundary::periodic ? spec.n_sites : spec.n_sites - 1;
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k)
    if ((k % 2 == 0) == (parity == Parity::even)) out.push_back(k);
  return out;
}

PauliSum chain_coupling(const ChainSpec& spec) {
  PauliSum h(spec.n_sites);
  int bonds = spec.boundary == Boundary::periodic ? spec.n_sites : spec.n_sites - 1;
  for (int k = 1; k <= bonds; ++k) {
    int next = wrap_site(k + 1, spec.n_sites);
    std::string zz(static_cast<std::size_t>(spec.n_sites), 'I');
    if (spec.coupling == Coupling::ising_zz) {
      zz[k - 1] = 'Z';
      zz[next - 1] = 'Z';
      h.add_term(zz, spec.j);
    } else {
      std::string xx = zz, yy = zz;
      xx[k - 1] = 'X';
      xx[next - 1] = 'X';
      yy[k - 1] = 'Y';
      yy[next - 1] = 'Y';
      h.add_term(xx, spec.j);
      h.add_term(yy, spec.j);
    }
  }
  return h;
}

PauliSum zxz_hamiltonian(int n_sites, Boundary boundary, double j_zxz) {
  PauliSum h(n_sites);
  int lo = boundary == Boundary::periodic ? 1 : 2;
  int hi = boundary == Boundary::periodic ? n_sites : n_sites - 1;
  for (int k = lo; k <= hi; ++k) h.add_term(zxz_string(n_sites, k, boundary), j_zxz);
  return h;
}

TimeDependentHamiltonian build_step(const ChainSpec& spec, Parity parity,
                                    const DriveProtocol& p) {
  if (spec.coupling != Coupling::ising_zz)
    throw std::invalid_argument("the ZXZ scheme drives an Ising chain");
  PauliSum stat = chain_coupling(spec);
  std::vector<DrivenTerm> driven;
  for (int k : drive_centers(spec, parity)) {
    PauliSum xk(spec.n_sites, {{single_site(spec.n_sites, k, 'X'), 1.0}});
    for (const auto& [profile, amp] : p.profiles()) driven.push_back({xk, profile, amp});
  }
  return TimeDependentHamiltonian(std::move(stat), std::move(driven));
}

Eigen::MatrixXcd trotter(const std::vector<PauliSum>& h_list, double t, int m) {
  if (m <= 0) throw std::invalid_argument("trotter requires m > 0");
  if (h_list.empty()) throw std::invalid_argument("trotter requires at least one term");
  int n = h_list.front().n();
  Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd step = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& h : h_list) {
    if (h.n() != n) throw dimension_error("qubit count mismatch in trotter list");
    step = exp_hermitian(h.to_matrix(), t / m) * step;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim, dim);
  for (int i = 0; i < m; ++i) out = step * out;
  return out;
}

CycleOperators chain_cycle(const ChainSpec& spec, const DriveProtocol& p,
                           const StepControl& sc) {
  if (spec.coupling != Coupling::ising_zz)
    throw std::invalid_argument("the ZXZ scheme drives an Ising chain");
  if (spec.boundary == Boundary::periodic && spec.n_sites % 2 != 0)
    throw std::invalid_argument(
        "even/odd alternation on a ring needs an even number of sites");
  double t_period = p.period();
  Eigen::MatrixXcd u_even, u_odd;
  parallel_for(2, [&](std::size_t i) {
    Eigen::MatrixXcd u =
        evolve(build_step(spec, i == 0 ? Parity::even : Parity::odd, p), 0.0,
               t_period, sc);
    (i == 0 ? u_even : u_odd) = std::move(u);
  });

  CycleOperators out;
  out.u_cycle = u_odd * u_even;
  // One even+odd cycle composes exp(-i c_zxz sum_k ZXZ T): referred to the
  // 2T wall-clock duration the simulated coupling is c_zxz/2.
  PauliSum target = zxz_hamiltonian(spec.n_sites, spec.boundary, p.c_target_over_j());
  out.u_target = exp_hermitian(target.to_matrix(), t_period);
  out.period = t_period;
  out.schedule.steps = {{Parity::even, p, t_period}, {Parity::odd, p, t_period}};
  out.schedule.repetitions = 1;
  return out;
}

double stroboscopic_error(const ChainSpec& spec, const DriveProtocol& p, int cycles,
                          const StepControl& sc) {
  if (cycles < 1) throw std::invalid_argument("cycle count must be >= 1");
  CycleOperators ops = chain_cycle(spec, p, sc);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(ops.u_cycle.rows(), ops.u_cycle.cols());
  Eigen::MatrixXcd v = u;
  for (int i = 0; i < cycles; ++i) {
    u = ops.u_cycle * u;
    v = ops.u_target * v;
  }
  return max_abs(Eigen::MatrixXcd(u - v));
}

Eigen::VectorXcd cluster_state(int n) {
  if (n < 3) throw std::invalid_argument("cluster state needs at least 3 sites");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi =
      Eigen::VectorXcd::Constant(dim, std::pow(2.0, -0.5 * n));
  for (int k = 1; k <= n; ++k) {
    int next = wrap_site(k + 1, n);
    Eigen::Index mask = (Eigen::Index{1} << (n - k)) | (Eigen::Index{1} << (n - next));
    for (Eigen::Index b = 0; b < dim; ++b)
      if ((b & mask) == mask) psi(b) = -psi(b);
  }
  // Global phase: rotate the first largest-magnitude amplitude to +1.
  Eigen::Index imax = 0;
  psi.cwiseAbs().maxCoeff(&imax);
  complexd phase = psi(imax) / std::abs(psi(imax));
  return psi / phase;
}

double adiabatic_prepare(const DriveProtocol& p, const RampSpec& ramp,
                         const StepControl& sc, InactiveField inactive, int n_sites) {
  if (n_sites < 4 || n_sites % 2 != 0)
    throw std::invalid_argument("ring preparation needs an even site count >= 4");
  double rounded = std::round(ramp.tf_over_t);
  if (std::abs(ramp.tf_over_t - rounded) > 1e-9 ||
      static_cast<long>(rounded) % 2 != 0 || rounded < 2.0)
    throw std::invalid_argument("t_f must be an even multiple of the drive period");
  const int periods = static_cast<int>(rounded);

  ChainSpec ring{n_sites, Boundary::periodic, Coupling::ising_zz, 1.0};
  const double omega = p.omega();
  const double t_period = p.period();
  const double t_f = periods * t_period;
  const double f0 = p.f0_over_omega * omega;
  const double f1 = p.harmonics_over_omega.size() > 0 ? p.harmonics_over_omega[0] * omega : 0.0;
  const double f2 = p.harmonics_over_omega.size() > 1 ? p.harmonics_over_omega[1] * omega : 0.0;

  // Ground state of sum_k [X_k + Z_k Z_{k+1}] at h(0) = 1.
  PauliSum h0 = chain_coupling(ring);
  for (int k = 1; k <= n_sites; ++k) h0.add_term(single_site(n_sites, k, 'X'), 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h0.to_matrix());
  Eigen::VectorXcd psi = es.eigenvectors().col(0);

  PauliSum coupling = chain_coupling(ring);
  for (int period = 0; period < periods; ++period) {
    Parity parity = period % 2 == 0 ? Parity::even : Parity::odd;
    std::vector<int> active = drive_centers(ring, parity);
    std::vector<DrivenTerm> driven;
    for (int k = 1; k <= n_sites; ++k) {
      PauliSum xk(n_sites, {{single_site(n_sites, k, 'X'), 1.0}});
      bool is_active = std::find(active.begin(), active.end(), k) != active.end();
      if (is_active) {
        driven.push_back({xk, TimeProfile::ramped_drive(t_f, omega, f0, f1, f2), 1.0});
      } else if (inactive == InactiveField::ramped_x) {
        driven.push_back({xk, TimeProfile::ramped_drive(t_f, omega, 0.0, 0.0, 0.0), 1.0});
      }
    }
    TimeDependentHamiltonian h(coupling, std::move(driven));
    psi = evolve_state(h, psi, period * t_period, (period + 1) * t_period, sc);
  }

  complexd overlap = cluster_state(n_sites).adjoint() * psi;
  return std::norm(overlap);
}

namespace {

// One digital step of the XY demo: indices give the role of each site.
TimeDependentHamiltonian xy_step(const ChainSpec& spec, const XYDriveParams& params,
                                 double h_over_omega, int center, int decoupled,
                                 bool include_last_bond, bool include_h) {
  double omega = params.omega_over_j;
  PauliSum stat = [&] {
    if (include_last_bond) return chain_coupling(spec);
    PauliSum h(spec.n_sites);
    for (int k = 1; k + 1 <= spec.n_sites; ++k) {
      if (k == 3) continue;  // bond (3,4) removed in the ideal comparison
      std::string xx(static_cast<std::size_t>(spec.n_sites), 'I');
      std::string yy = xx;
      xx[k - 1] = 'X';
      xx[k] = 'X';
      yy[k - 1] = 'Y';
      yy[k] = 'Y';
      h.add_term(xx, spec.j);
      h.add_term(yy, spec.j);
    }
    return h;
  }();

  for (int k = 1; k <= spec.n_sites; ++k) {
    if (k == decoupled || k == center) continue;
    stat.add_term(single_site(spec.n_sites, k, 'Z'), params.f_edge * omega);
  }
  stat.add_term(single_site(spec.n_sites, center, 'Z'), params.f_center0 * omega);
  if (include_h)
    stat.add_term(single_site(spec.n_sites, decoupled, 'Z'), h_over_omega * omega);

  PauliSum zc(spec.n_sites, {{single_site(spec.n_sites, center, 'Z'), 1.0}});
  std::vector<DrivenTerm> driven{
      {zc, TimeProfile::cosine(1, omega), params.f_center1 * omega},
      {zc, TimeProfile::cosine(2, omega), params.f_center2 * omega}};
  return TimeDependentHamiltonian(std::move(stat), std::move(driven));
}

void validate_xy(const ChainSpec& spec, double h_over_omega) {
  if (spec.coupling != Coupling::xy || spec.n_sites != 4 ||
      spec.boundary != Boundary::open)
    throw std::invalid_argument("the XY demo runs on an open 4-site chain");
  if (std::abs(h_over_omega - std::round(h_over_omega)) > 1e-9 ||
      std::round(h_over_omega) < 1.0)
    throw config_error("decoupling strength must be a positive integer multiple of omega");
}

}  // namespace

double xy_decoupling_distance(const ChainSpec& spec, const XYDriveParams& params,
                              double h_over_omega, const StepControl& sc) {
  validate_xy(spec, h_over_omega);
  double t_period = kTwoPi / params.omega_over_j;
  auto extract = [&](const TimeDependentHamiltonian& h) {
    return PauliSum::decompose(log_unitary(evolve(h, 0.0, t_period, sc), t_period));
  };
  PauliSum actual =
      extract(xy_step(spec, params, h_over_omega, 2, 4, true, true));
  PauliSum ideal =
      extract(xy_step(spec, params, h_over_omega, 2, 4, false, false));
  return relative_hamiltonian_distance(actual, ideal);
}

XYDemoResult xy_digital(const ChainSpec& spec, const XYDriveParams& params,
                        double h_over_omega, const StepControl& sc) {
  validate_xy(spec, h_over_omega);
  double t_period = kTwoPi / params.omega_over_j;
  Eigen::MatrixXcd u1 =
      evolve(xy_step(spec, params, h_over_omega, 2, 4, true, true), 0.0, t_period, sc);
  Eigen::MatrixXcd u2 =
      evolve(xy_step(spec, params, h_over_omega, 3, 1, true, true), 0.0, t_period, sc);
  PauliSum gen = PauliSum::decompose(log_unitary(u2 * u1, 2.0 * t_period));

  XYDemoResult out;
  const std::vector<std::string> targets{"XZXI", "YZYI", "IXZX", "IYZY"};
  double sum_target = 0.0;
  double min_target = std::numeric_limits<double>::infinity();
  double max_undesired = 0.0;
  for (const auto& [s, c] : gen.terms()) {
    if (s == "IIII") continue;  // global phase
    out.chart.add_term(s, c);
    bool is_target = std::find(targets.begin(), targets.end(), s) != targets.end();
    if (!is_target) max_undesired = std::max(max_undesired, std::abs(c));
  }
  for (const auto& t : targets) {
    double c = out.chart.coefficient(t).real();
    sum_target += c;
    min_target = std::min(min_target, std::abs(c));
  }
  out.j_eff = sum_target / 4.0;
  out.min_target = min_target;
  out.max_undesired = max_undesired;
  out.d_decoupling = xy_decoupling_distance(spec, params, h_over_omega, sc);
  return out;
}

}  // namespace forge
