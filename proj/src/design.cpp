#include "forge/design.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "forge/errors.hpp"
#include "forge/parallel.hpp"

namespace forge {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr complexd kI{0.0, 1.0};
}  // namespace

DriveProtocol DriveProtocol::for_target(double omega_over_j, double c_target_over_j,
                                        std::vector<double> harmonics_over_omega,
                                        std::vector<int> sites) {
  if (omega_over_j <= 0.0) throw std::invalid_argument("omega must be positive");
  DriveProtocol p;
  p.omega_over_j = omega_over_j;
  p.f0_over_omega = -c_target_over_j / omega_over_j;
  p.harmonics_over_omega = std::move(harmonics_over_omega);
  p.sites = std::move(sites);
  return p;
}

double DriveProtocol::period() const { return kTwoPi / omega_over_j; }

double DriveProtocol::f_eval(double t) const {
  double f = f0_over_omega;
  for (std::size_t j = 0; j < harmonics_over_omega.size(); ++j)
    f += harmonics_over_omega[j] *
         std::cos(static_cast<double>(j + 1) * omega_over_j * t);
  return f * omega_over_j;
}

std::vector<std::pair<TimeProfile, double>> DriveProtocol::profiles() const {
  std::vector<std::pair<TimeProfile, double>> out;
  out.emplace_back(TimeProfile::constant(), f0_over_omega * omega_over_j);
  for (std::size_t j = 0; j < harmonics_over_omega.size(); ++j)
    out.emplace_back(TimeProfile::cosine(static_cast<int>(j + 1), omega_over_j),
                     harmonics_over_omega[j] * omega_over_j);
  return out;
}

ReducedProblem reduce(double j, const DriveProtocol& p) {
  if (p.sites != std::vector<int>{2})
    throw std::invalid_argument(
        "reduction requires the drive on the central site of a 3-spin unit");
  auto conditioned = [&](double z_weight) {
    PauliSum stat(1);
    if (z_weight != 0.0) stat.add_term("Z", z_weight * j);
    std::vector<DrivenTerm> driven;
    for (const auto& [profile, amp] : p.profiles())
      driven.push_back({PauliSum(1, {{"X", 1.0}}), profile, amp});
    return TimeDependentHamiltonian(stat, std::move(driven));
  };
  return ReducedProblem{conditioned(2.0), conditioned(-2.0), conditioned(0.0)};
}

std::array<double, 3> su2_extract(const Eigen::Matrix2cd& u) {
  if (std::abs(u.determinant() - complexd(1.0)) > 1e-10)
    throw std::invalid_argument("su2_extract requires det U = 1");
  double c = std::clamp(0.5 * u.trace().real(), -1.0, 1.0);
  double theta = std::acos(c);
  if (theta < 1e-12) return {0.0, 0.0, 0.0};
  if (std::numbers::pi - theta < 1e-6)
    throw branch_error("rotation angle within 1e-6 of pi; axis is ambiguous");
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0, 1, 1, 0;
  sy << 0, -kI, kI, 0;
  sz << 1, 0, 0, -1;
  double s = std::sin(theta);
  double nx = (kI * (sx * u).trace() * 0.5).real() / s;
  double ny = (kI * (sy * u).trace() * 0.5).real() / s;
  double nz = (kI * (sz * u).trace() * 0.5).real() / s;
  return {theta * nx, theta * ny, theta * nz};
}

ObjectiveValue objective(double f1_over_omega, double f2_over_omega,
                         double omega_over_j, double c_target_over_j,
                         const StepControl& sc) {
  DriveProtocol p = DriveProtocol::for_target(omega_over_j, c_target_over_j,
                                              {f1_over_omega, f2_over_omega});
  ReducedProblem r = reduce(1.0, p);
  Eigen::Matrix2cd u = evolve(r.h_plus, 0.0, p.period(), sc);
  auto a = su2_extract(u);
  ObjectiveValue v;
  v.d_x = a[0] / p.period() - c_target_over_j;
  v.d_z = a[2] / p.period();
  v.value = v.d_x * v.d_x + v.d_z * v.d_z;
  return v;
}

std::vector<std::array<double, 2>> default_seed_grid() {
  std::vector<std::array<double, 2>> seeds;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      seeds.push_back({-3.0 + 1.5 * i, -3.0 + 1.5 * j});
  return seeds;
}

OptimizationResult optimize(double omega_over_j, double c_target_over_j,
                            const std::vector<std::array<double, 2>>& seeds,
                            const StepControl& sc, const NelderMeadOptions& nm) {
  if (seeds.empty()) throw std::invalid_argument("optimize requires at least one seed");
  auto penalized = [&](double f1, double f2) {
    // Points whose rotation angle lands on the SU(2) branch cut are rejected.
    try {
      return objective(f1, f2, omega_over_j, c_target_over_j, sc).value;
    } catch (const branch_error&) {
      return 1e6;
    }
  };

  std::vector<NelderMeadResult> runs(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) {
    runs[i] = nelder_mead_2d(penalized, seeds[i], nm);
  });

  std::size_t best = 0;
  long evaluations = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    evaluations += runs[i].evaluations;
    const auto& a = runs[i];
    const auto& b = runs[best];
    if (a.fmin < b.fmin ||
        (a.fmin == b.fmin && (i != best && a.x < b.x)))
      best = i;
  }

  OptimizationResult out;
  out.protocol = DriveProtocol::for_target(omega_over_j, c_target_over_j,
                                           {runs[best].x[0], runs[best].x[1]});
  ObjectiveValue v = objective(runs[best].x[0], runs[best].x[1], omega_over_j,
                               c_target_over_j, sc);
  out.objective = v.value;
  out.d_x = v.d_x;
  out.d_z = v.d_z;
  out.evaluations = evaluations;
  out.converged = out.objective < kObjectiveSuccess;
  return out;
}

std::vector<double> log_spaced(double lo, double hi, int points) {
  if (points < 2 || lo <= 0.0 || hi <= lo)
    throw std::invalid_argument("log grid requires 0 < lo < hi and >= 2 points");
  std::vector<double> out(points);
  double step = (std::log10(hi) - std::log10(lo)) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = std::pow(10.0, std::log10(lo) + i * step);
  return out;
}

namespace {

// Three-spin building block: J(Z1Z2 + Z2Z3) + f(t) X2, with optional
// multiplicative errors on the harmonics.
TimeDependentHamiltonian three_spin_block(const DriveProtocol& p, double eps1,
                                          double eps2) {
  PauliSum stat(3, {{"ZZI", 1.0}, {"IZZ", 1.0}});
  PauliSum x2(3, {{"IXI", 1.0}});
  std::vector<DrivenTerm> driven;
  driven.push_back({x2, TimeProfile::constant(), p.f0_over_omega * p.omega()});
  std::vector<double> scale{1.0 + eps1, 1.0 + eps2};
  for (std::size_t j = 0; j < p.harmonics_over_omega.size(); ++j) {
    double s = j < scale.size() ? scale[j] : 1.0;
    driven.push_back({x2, TimeProfile::cosine(static_cast<int>(j + 1), p.omega()),
                      s * p.harmonics_over_omega[j] * p.omega()});
  }
  return TimeDependentHamiltonian(stat, std::move(driven));
}

}  // namespace

std::vector<RobustnessPoint> robustness_scan(const DriveProtocol& p,
                                             const std::vector<double>& eps1,
                                             const std::vector<double>& eps2,
                                             const StepControl& sc) {
  std::vector<RobustnessPoint> out(eps1.size() * eps2.size());
  parallel_for(out.size(), [&](std::size_t idx) {
    std::size_t i = idx / eps2.size();
    std::size_t j = idx % eps2.size();
    auto table =
        coefficient_table(effective_hamiltonian(three_spin_block(p, eps1[i], eps2[j]), sc));
    out[idx] = {eps1[i], eps2[j], std::abs(table.c_x), std::abs(table.c_zz)};
  });
  return out;
}

EchoResult echo_oracle(double j, double lambda, double width_frac) {
  if (j <= 0.0) throw std::invalid_argument("coupling must be positive");
  const double t_total = std::numbers::pi / j;
  const double t_pulse = 0.75 * t_total;
  const double width = t_total * width_frac;

  auto conditioned = [&](double z_weight) {
    PauliSum stat(1);
    if (z_weight != 0.0) stat.add_term("Z", z_weight * j);
    std::vector<DrivenTerm> driven{
        {PauliSum(1, {{"X", 1.0}}), TimeProfile::delta_pulse(t_pulse, lambda, width),
         1.0}};
    return TimeDependentHamiltonian(stat, std::move(driven));
  };

  auto x_rotation = [&](double angle) {
    // exp(-i*angle*X)
    Eigen::Matrix2cd u;
    u << std::cos(angle), -kI * std::sin(angle), -kI * std::sin(angle),
        std::cos(angle);
    return u;
  };

  EchoResult r;
  r.analytic_plus = x_rotation(-lambda);
  r.analytic_minus = x_rotation(-lambda);
  r.analytic_zero = x_rotation(lambda);
  StepControl sc;
  r.numeric_plus = evolve(conditioned(2.0), 0.0, t_total, sc);
  r.numeric_minus = evolve(conditioned(-2.0), 0.0, t_total, sc);
  r.numeric_zero = evolve(conditioned(0.0), 0.0, t_total, sc);
  r.max_diff = std::max({max_abs(Eigen::MatrixXcd(r.numeric_plus - r.analytic_plus)),
                         max_abs(Eigen::MatrixXcd(r.numeric_minus - r.analytic_minus)),
                         max_abs(Eigen::MatrixXcd(r.numeric_zero - r.analytic_zero))});
  return r;
}

}  // namespace forge
