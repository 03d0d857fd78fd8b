#include "forge/prop.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "forge/errors.hpp"

namespace forge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr complexd kI{0.0, 1.0};

double inf_norm(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

double ramp_r(double s) {
  return ((((-20.0 * s + 70.0) * s - 84.0) * s + 35.0)) * s * s * s * s;
}

double ramp_r_d1(double s) {
  return ((((-140.0 * s + 420.0) * s - 420.0) * s + 140.0)) * s * s * s;
}

double ramp_r_d2(double s) {
  return ((((-840.0 * s + 2100.0) * s - 1680.0) * s + 420.0)) * s * s;
}

double ramp_r_d3(double s) {
  return ((((-4200.0 * s + 8400.0) * s - 5040.0) * s + 840.0)) * s;
}

TimeProfile TimeProfile::constant() { return TimeProfile{}; }

TimeProfile TimeProfile::cosine(int k, double omega) {
  TimeProfile p;
  p.kind = Kind::cosine;
  p.harmonic = k;
  p.omega = omega;
  return p;
}

TimeProfile TimeProfile::sine(int k, double omega) {
  TimeProfile p;
  p.kind = Kind::sine;
  p.harmonic = k;
  p.omega = omega;
  return p;
}

TimeProfile TimeProfile::delta_pulse(double t0, double area, double width) {
  if (width <= 0.0) throw std::invalid_argument("delta pulse width must be positive");
  TimeProfile p;
  p.kind = Kind::delta_pulse;
  p.t0 = t0;
  p.area = area;
  p.width = width;
  return p;
}

TimeProfile TimeProfile::ramped_drive(double t_f, double omega, double f0, double f1,
                                      double f2) {
  if (t_f <= 0.0) throw std::invalid_argument("ramp duration must be positive");
  TimeProfile p;
  p.kind = Kind::ramped_drive;
  p.t_f = t_f;
  p.omega = omega;
  p.f0 = f0;
  p.f1 = f1;
  p.f2 = f2;
  return p;
}

double TimeProfile::eval(double t) const {
  switch (kind) {
    case Kind::constant:
      return 1.0;
    case Kind::cosine:
      return std::cos(harmonic * omega * t);
    case Kind::sine:
      return std::sin(harmonic * omega * t);
    case Kind::delta_pulse:
      return (t >= t0 - 0.5 * width && t < t0 + 0.5 * width) ? area / width : 0.0;
    case Kind::ramped_drive: {
      double s = std::clamp(t / t_f, 0.0, 1.0);
      double r = ramp_r(s);
      double f = f0 + f1 * std::cos(omega * t) + f2 * std::cos(2.0 * omega * t);
      return (1.0 - r) + r * f;
    }
  }
  return 0.0;
}

int TimeProfile::max_harmonic() const {
  switch (kind) {
    case Kind::cosine:
    case Kind::sine:
      return std::abs(harmonic);
    case Kind::ramped_drive:
      return 2;
    default:
      return 0;
  }
}

void TimeProfile::append_breakpoints(double ta, double tb,
                                     std::vector<double>& out) const {
  if (kind != Kind::delta_pulse) return;
  for (double t : {t0 - 0.5 * width, t0 + 0.5 * width})
    if (t > ta && t < tb) out.push_back(t);
}

TimeDependentHamiltonian::TimeDependentHamiltonian(PauliSum static_part,
                                                   std::vector<DrivenTerm> driven)
    : static_(std::move(static_part)), driven_(std::move(driven)) {
  if (!static_.is_hermitian())
    throw std::invalid_argument("static part must be Hermitian");
  for (const auto& d : driven_) {
    if (d.op.n() != static_.n())
      throw dimension_error("driven term qubit count mismatch");
    if (!d.op.is_hermitian())
      throw std::invalid_argument("driven operators must be Hermitian");
    if (d.profile.omega > 0.0) {
      if (base_omega_ == 0.0) {
        base_omega_ = d.profile.omega;
      } else if (std::abs(d.profile.omega - base_omega_) >
                 1e-12 * std::abs(base_omega_)) {
        throw std::invalid_argument("profiles must share one base frequency");
      }
    }
    max_harmonic_ = std::max(max_harmonic_, d.profile.max_harmonic());
  }
}

double TimeDependentHamiltonian::period() const {
  if (base_omega_ <= 0.0)
    throw std::invalid_argument("Hamiltonian has no oscillatory profile");
  return kTwoPi / base_omega_;
}

Eigen::MatrixXcd TimeDependentHamiltonian::matrix_at(double t, int n_cap) const {
  Eigen::MatrixXcd out = static_.to_matrix(n_cap);
  for (const auto& d : driven_)
    out += (d.amplitude * d.profile.eval(t)) * d.op.to_matrix(n_cap);
  return out;
}

void StepControl::validate() const {
  if (steps_per_period < 16 || steps_per_period % 2 != 0)
    throw std::invalid_argument("steps-per-period must be >= 16 and even");
  if (refine_tol <= 0.0) throw std::invalid_argument("refinement tolerance must be > 0");
  if (max_refinements < 0) throw std::invalid_argument("max refinements must be >= 0");
}

Eigen::MatrixXcd exp_hermitian(const Eigen::MatrixXcd& h, double t) {
  if (h.rows() != h.cols()) throw dimension_error("matrix must be square");
  if (max_abs(Eigen::MatrixXcd(h - h.adjoint())) > 1e-10)
    throw std::invalid_argument("matrix is not Hermitian to 1e-10");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((h + h.adjoint()) * 0.5);
  Eigen::VectorXcd phases =
      (complexd(0.0, -t) * es.eigenvalues().array().cast<complexd>()).exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::MatrixXcd log_unitary(const Eigen::MatrixXcd& u, double period) {
  if (u.rows() != u.cols()) throw dimension_error("matrix must be square");
  if (period <= 0.0) throw std::invalid_argument("period must be positive");
  Eigen::MatrixXcd defect = u.adjoint() * u;
  defect -= Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  if (max_abs(defect) > 1e-10)
    throw std::invalid_argument("matrix is not unitary to 1e-10");

  // U is normal, so its Schur form is diagonal up to input noise; the
  // Schur basis is an orthonormal eigenbasis even under degeneracy.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
  Eigen::VectorXd gen(u.rows());
  for (Eigen::Index j = 0; j < u.rows(); ++j) {
    double theta = std::arg(schur.matrixT()(j, j));  // in (-pi, pi]
    if (std::numbers::pi - std::abs(theta) < 1e-6)
      throw branch_error("eigenphase " + std::to_string(theta) +
                         " within 1e-6 of the branch cut at -pi");
    gen(j) = -theta / period;
  }
  Eigen::VectorXcd genc = gen.cast<complexd>();
  Eigen::MatrixXcd h = schur.matrixU() * genc.asDiagonal() * schur.matrixU().adjoint();
  h = (h + h.adjoint()) * 0.5;
  if (max_abs(Eigen::MatrixXcd(exp_hermitian(h, period) - u)) > 1e-10)
    throw convergence_error("principal logarithm reconstruction exceeds 1e-10");
  return h;
}

namespace {

bool same_profile(const TimeProfile& a, const TimeProfile& b) {
  return a.kind == b.kind && a.harmonic == b.harmonic && a.omega == b.omega &&
         a.t0 == b.t0 && a.area == b.area && a.width == b.width && a.t_f == b.t_f &&
         a.f0 == b.f0 && a.f1 == b.f1 && a.f2 == b.f2;
}

// Dense form of the Hamiltonian with equal profiles merged, plus the
// integration segments split at profile discontinuities.
struct SteppingPlan {
  Eigen::MatrixXcd static_m;
  std::vector<std::pair<Eigen::MatrixXcd, TimeProfile>> terms;
  struct Segment {
    double ta, tb;
    std::int64_t steps0;
  };
  std::vector<Segment> segments;

  SteppingPlan(const TimeDependentHamiltonian& h, double t0, double t1,
               const StepControl& sc) {
    static_m = h.static_part().to_matrix();
    for (const auto& d : h.driven()) {
      Eigen::MatrixXcd m = d.amplitude * d.op.to_matrix();
      auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) {
        return same_profile(t.second, d.profile);
      });
      if (it != terms.end())
        it->first += m;
      else
        terms.emplace_back(std::move(m), d.profile);
    }

    std::vector<double> cuts{t0, t1};
    for (const auto& [m, p] : terms) p.append_breakpoints(t0, t1, cuts);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [&](double a, double b) {
                             return std::abs(a - b) < 1e-13 * (t1 - t0);
                           }),
               cuts.end());

    double t_base = h.base_omega() > 0.0 ? kTwoPi / h.base_omega() : (t1 - t0);
    // Lab-frame style drives need steps scaled with the fastest harmonic.
    double spp = std::max(static_cast<double>(sc.steps_per_period),
                          32.0 * h.max_harmonic());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      double len = cuts[i + 1] - cuts[i];
      auto steps = static_cast<std::int64_t>(std::ceil(spp * len / t_base));
      segments.push_back({cuts[i], cuts[i + 1], std::max<std::int64_t>(1, steps)});
    }
  }

  void hamiltonian_at(double t, Eigen::MatrixXcd& out) const {
    out = static_m;
    for (const auto& [m, p] : terms) out += p.eval(t) * m;
  }
};

// b <- exp(-i*h*dt) * b, Taylor-summed in place; falls back to
// scaling-and-squaring when ||h*dt|| is large. Truncation stays far below
// the stepping error, so unitarity is preserved to working precision.
void apply_exp(const Eigen::MatrixXcd& h, double dt, Eigen::MatrixXcd& b,
               Eigen::MatrixXcd& term, Eigen::MatrixXcd& tmp) {
  double a_norm = inf_norm(h) * std::abs(dt);
  if (a_norm < 0.9) {
    term = b;
    for (int k = 1; k <= 64; ++k) {
      tmp.noalias() = h * term;
      term = tmp * complexd(0.0, -dt / k);
      b += term;
      if (max_abs(term) < 1e-17) break;
    }
    return;
  }
  int squarings = std::max(1, static_cast<int>(std::ceil(std::log2(a_norm / 0.5))));
  double scaled_dt = dt / static_cast<double>(std::int64_t{1} << squarings);
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Identity(h.rows(), h.cols());
  Eigen::MatrixXcd term2(h.rows(), h.cols()), tmp2(h.rows(), h.cols());
  apply_exp(h, scaled_dt, e, term2, tmp2);
  for (int s = 0; s < squarings; ++s) e = (e * e).eval();
  b = (e * b).eval();
}

Eigen::MatrixXcd propagate_level(const SteppingPlan& plan, int level,
                                 const Eigen::MatrixXcd& initial) {
  Eigen::MatrixXcd b = initial;
  Eigen::MatrixXcd h(plan.static_m.rows(), plan.static_m.cols());
  Eigen::MatrixXcd term(b.rows(), b.cols()), tmp(b.rows(), b.cols());
  for (const auto& seg : plan.segments) {
    std::int64_t n = seg.steps0 << level;
    double dt = (seg.tb - seg.ta) / static_cast<double>(n);
    for (std::int64_t i = 0; i < n; ++i) {
      double tm = seg.ta + (static_cast<double>(i) + 0.5) * dt;
      plan.hamiltonian_at(tm, h);
      apply_exp(h, dt, b, term, tmp);
    }
  }
  return b;
}

Eigen::MatrixXcd refine(const SteppingPlan& plan, const StepControl& sc,
                        const Eigen::MatrixXcd& initial) {
  Eigen::MatrixXcd u_prev = propagate_level(plan, 0, initial);
  if (sc.max_refinements == 0) return u_prev;  // fixed-step mode
  Eigen::MatrixXcd e_prev;
  bool have_e_prev = false;
  for (int level = 1; level <= sc.max_refinements; ++level) {
    Eigen::MatrixXcd u = propagate_level(plan, level, initial);
    Eigen::MatrixXcd e = (4.0 * u - u_prev) / 3.0;
    if (max_abs(Eigen::MatrixXcd(u - u_prev)) < sc.refine_tol) return e;
    if (have_e_prev && max_abs(Eigen::MatrixXcd(e - e_prev)) < sc.refine_tol) return e;
    u_prev = std::move(u);
    e_prev = std::move(e);
    have_e_prev = true;
  }
  throw convergence_error("step refinement did not converge within " +
                          std::to_string(sc.max_refinements) + " halvings");
}

}  // namespace

Eigen::MatrixXcd evolve(const TimeDependentHamiltonian& h, double t0, double t1,
                        const StepControl& sc) {
  sc.validate();
  if (!(t1 > t0)) throw std::invalid_argument("evolve requires t1 > t0");
  SteppingPlan plan(h, t0, t1, sc);
  Eigen::Index dim = plan.static_m.rows();
  Eigen::MatrixXcd u = refine(plan, sc, Eigen::MatrixXcd::Identity(dim, dim));
  // Project the extrapolant back onto the unitary group.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(u, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Eigen::VectorXcd evolve_state(const TimeDependentHamiltonian& h,
                              const Eigen::VectorXcd& psi, double t0, double t1,
                              const StepControl& sc) {
  sc.validate();
  if (!(t1 > t0)) throw std::invalid_argument("evolve requires t1 > t0");
  SteppingPlan plan(h, t0, t1, sc);
  if (psi.size() != plan.static_m.rows())
    throw dimension_error("state dimension does not match Hamiltonian");
  Eigen::VectorXcd out = refine(plan, sc, psi);
  return out / out.norm();
}

}  // namespace forge
