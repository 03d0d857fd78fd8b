#include <doctest.h>

#include <numbers>
#include <random>

#include "forge/errors.hpp"
#include "forge/prop.hpp"
#include "test_util.hpp"

using namespace forge;
using oracle::max_norm;

namespace {

constexpr double kPi = std::numbers::pi;

// Driven 3-spin block J(Z1Z2+Z2Z3) + f(t) X2 with amplitudes in units of omega.
TimeDependentHamiltonian table_block(double omega, double f0_ov, double f1_ov,
                                     double f2_ov) {
  PauliSum stat(3, {{"ZZI", 1.0}, {"IZZ", 1.0}});
  PauliSum x2(3, {{"IXI", 1.0}});
  std::vector<DrivenTerm> driven{
      {x2, TimeProfile::constant(), f0_ov * omega},
      {x2, TimeProfile::cosine(1, omega), f1_ov * omega},
      {x2, TimeProfile::cosine(2, omega), f2_ov * omega}};
  return TimeDependentHamiltonian(stat, driven);
}

}  // namespace

TEST_SUITE_BEGIN("prop");

TEST_CASE("ramp polynomial boundary values and derivatives") {
  CHECK(ramp_r(0.0) == 0.0);
  CHECK(ramp_r(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (auto d : {ramp_r_d1, ramp_r_d2, ramp_r_d3}) {
    CHECK(d(0.0) == 0.0);
    CHECK(std::abs(d(1.0)) < 1e-12);
  }
  // finite-difference oracle for r' in the interior
  double s = 0.37, h = 1e-6;
  CHECK(std::abs((ramp_r(s + h) - ramp_r(s - h)) / (2 * h) - ramp_r_d1(s)) < 1e-8);
}

TEST_CASE("exp_hermitian basics") {
  CHECK(max_norm(exp_hermitian(Eigen::MatrixXcd::Zero(4, 4), 1.3) -
                 Eigen::MatrixXcd::Identity(4, 4)) < 1e-15);

  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  Eigen::MatrixXcd u = exp_hermitian(z, kPi / 2);
  CHECK(std::abs(u(0, 0) - std::exp(complexd(0, -kPi / 2))) < 1e-14);
  CHECK(std::abs(u(1, 1) - std::exp(complexd(0, kPi / 2))) < 1e-14);
  CHECK(std::abs(u(0, 1)) < 1e-15);
}

TEST_CASE("exp_hermitian inverse and unitarity on random input") {
  std::mt19937 rng(3);
  Eigen::MatrixXcd h = oracle::random_hermitian(8, rng);
  Eigen::MatrixXcd u = exp_hermitian(h, 0.37);
  CHECK(max_norm(u * u.adjoint() - Eigen::MatrixXcd::Identity(8, 8)) < 1e-12);
  CHECK(max_norm(u * exp_hermitian(h, -0.37) - Eigen::MatrixXcd::Identity(8, 8)) <
        1e-12);
}

TEST_CASE("exp_hermitian rejects non-Hermitian input") {
  Eigen::Matrix2cd m;
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(exp_hermitian(m, 1.0), std::invalid_argument);
}

TEST_CASE("log_unitary basics") {
  CHECK(max_norm(log_unitary(Eigen::MatrixXcd::Identity(4, 4), 1.0)) < 1e-12);

  PauliSum x(1, {{"X", 0.2}});
  Eigen::MatrixXcd u = exp_hermitian(x.to_matrix(), 1.0);
  CHECK(max_norm(log_unitary(u, 1.0) - x.to_matrix()) < 1e-12);
}

TEST_CASE("log_unitary round trip on random generators") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    Eigen::MatrixXcd h = oracle::random_hermitian(8, rng);
    double t = 1.0;
    // keep the spectrum safely inside the principal branch
    h *= (kPi - 0.1) / (max_norm(h) * 8.0);
    Eigen::MatrixXcd u = exp_hermitian(h, t);
    CHECK(max_norm(log_unitary(u, t) - h) < 1e-10);
  }
}

TEST_CASE("log_unitary branch and unitarity errors") {
  Eigen::Matrix2cd near_cut = Eigen::Matrix2cd::Zero();
  near_cut(0, 0) = std::exp(complexd(0.0, kPi - 1e-9));
  near_cut(1, 1) = 1.0;
  CHECK_THROWS_AS(log_unitary(near_cut, 1.0), branch_error);

  Eigen::Matrix2cd not_unitary = Eigen::Matrix2cd::Identity() * 1.5;
  CHECK_THROWS_AS(log_unitary(not_unitary, 1.0), std::invalid_argument);
}

TEST_CASE("step control validation") {
  StepControl sc;
  CHECK_NOTHROW(sc.validate());
  sc.steps_per_period = 15;
  CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
  sc.steps_per_period = 18;
  CHECK_NOTHROW(sc.validate());
  sc.steps_per_period = 17;
  CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
}

TEST_CASE("evolve of an undriven diagonal Hamiltonian is the exact exponential") {
  PauliSum stat(3, {{"ZZI", 1.0}, {"IZZ", 1.0}});
  TimeDependentHamiltonian h(stat, {});
  double t = 2.0 * kPi / 5.0;
  StepControl sc;
  Eigen::MatrixXcd u = evolve(h, 0.0, t, sc);
  CHECK(max_norm(u - exp_hermitian(stat.to_matrix(), t)) < 1e-13);
}

TEST_CASE("one-period propagator of the omega=5J drive leaves only the ZXZ term") {
  double omega = 5.0;
  TimeDependentHamiltonian h =
      table_block(omega, 0.04, 1.0849517026900328, 1.2455409822710848);
  double t_period = 2.0 * kPi / omega;
  StepControl sc;
  Eigen::MatrixXcd u = evolve(h, 0.0, t_period, sc);
  CHECK(max_norm(u * u.adjoint() - Eigen::MatrixXcd::Identity(8, 8)) < 1e-11);

  Eigen::MatrixXcd gen = log_unitary(u, t_period);
  PauliSum eff = PauliSum::decompose(gen);
  CHECK(eff.coefficient("ZXZ").real() == doctest::Approx(-0.2).epsilon(1e-6));
  CHECK(std::abs(eff.coefficient("IXI")) < 1e-8);
  CHECK(std::abs(eff.coefficient("ZZI")) < 1e-8);
  CHECK(std::abs(eff.coefficient("ZYI")) < 1e-8);
}

TEST_CASE("doubling steps-per-period leaves the converged result unchanged") {
  double omega = 5.0;
  TimeDependentHamiltonian h =
      table_block(omega, 0.04, 1.0849517026900328, 1.2455409822710848);
  double t_period = 2.0 * kPi / omega;
  StepControl coarse;
  StepControl fine;
  fine.steps_per_period = 512;
  Eigen::MatrixXcd a = evolve(h, 0.0, t_period, coarse);
  Eigen::MatrixXcd b = evolve(h, 0.0, t_period, fine);
  CHECK(max_norm(a - b) < 1e-12);
}

TEST_CASE("composition over subintervals") {
  double omega = 5.0;
  TimeDependentHamiltonian h = table_block(omega, 0.04, 1.0, 1.2);
  double t_period = 2.0 * kPi / omega;
  StepControl sc;
  Eigen::MatrixXcd whole = evolve(h, 0.0, t_period, sc);
  Eigen::MatrixXcd parts =
      evolve(h, 0.4 * t_period, t_period, sc) * evolve(h, 0.0, 0.4 * t_period, sc);
  CHECK(max_norm(whole - parts) < 1e-10);
}

TEST_CASE("raw midpoint stepping converges at order >= 2") {
  double omega = 2.0;
  TimeDependentHamiltonian h = table_block(omega, 0.1, 0.8, 0.5);
  double t_period = 2.0 * kPi / omega;
  StepControl ref;  // converged reference
  Eigen::MatrixXcd exact = evolve(h, 0.0, t_period, ref);

  std::vector<double> errs;
  for (int spp : {64, 128, 256, 512}) {
    StepControl sc;
    sc.steps_per_period = spp;
    sc.max_refinements = 0;  // plain midpoint result at this resolution
    sc.refine_tol = 1e30;
    Eigen::MatrixXcd u = evolve(h, 0.0, t_period, sc);
    errs.push_back(max_norm(u - exact));
  }
  // least-squares slope of log2(err) against halving level
  double mean_level = 1.5, mean_log = 0.0;
  for (double e : errs) mean_log += std::log2(e) / errs.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < errs.size(); ++i) {
    num += (i - mean_level) * (std::log2(errs[i]) - mean_log);
    den += (i - mean_level) * (i - mean_level);
  }
  double order = -num / den;
  CHECK(order >= 1.9);
}

TEST_CASE("refinement failure raises convergence_error") {
  TimeDependentHamiltonian h = table_block(1.0, 0.2, -2.0, -2.5);
  StepControl sc;
  sc.refine_tol = 1e-30;  // below the roundoff floor
  sc.max_refinements = 2;
  CHECK_THROWS_AS(evolve(h, 0.0, 2.0 * kPi, sc), convergence_error);
}

TEST_CASE("delta pulse profile integrates to the pulse area") {
  PauliSum x(1, {{"X", 1.0}});
  TimeDependentHamiltonian h(PauliSum(1),
                             {{x, TimeProfile::delta_pulse(0.5, 0.3, 1e-4), 1.0}});
  StepControl sc;
  Eigen::MatrixXcd u = evolve(h, 0.0, 1.0, sc);
  CHECK(max_norm(u - exp_hermitian(0.3 * x.to_matrix(), 1.0)) < 1e-12);
}

TEST_CASE("evolve_state matches the propagator applied to the state") {
  double omega = 5.0;
  TimeDependentHamiltonian h = table_block(omega, 0.04, 1.0, 1.2);
  double t_period = 2.0 * kPi / omega;
  StepControl sc;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
  psi(3) = std::sqrt(0.5);
  psi(5) = complexd(0.0, std::sqrt(0.5));
  Eigen::VectorXcd direct = evolve(h, 0.0, t_period, sc) * psi;
  Eigen::VectorXcd stepped = evolve_state(h, psi, 0.0, t_period, sc);
  CHECK((direct - stepped).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("profiles reject mixed base frequencies") {
  PauliSum x(1, {{"X", 1.0}});
  std::vector<DrivenTerm> driven{{x, TimeProfile::cosine(1, 2.0), 1.0},
                                 {x, TimeProfile::cosine(1, 3.0), 1.0}};
  CHECK_THROWS_AS(TimeDependentHamiltonian(PauliSum(1), driven),
                  std::invalid_argument);
}

TEST_SUITE_END();
