#include <doctest.h>

#include <numbers>

#include "forge/errors.hpp"
#include "forge/floquet.hpp"
#include "test_util.hpp"

using namespace forge;
using oracle::max_norm;

namespace {

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

TEST_SUITE_BEGIN("floquet");

TEST_CASE("undriven Ising block extracts exactly") {
  PauliSum stat(3, {{"ZZI", 1.0}, {"IZZ", 1.0}});
  PauliSum x2(3, {{"IXI", 1.0}});
  // zero-amplitude drive keeps the period defined
  TimeDependentHamiltonian h(stat, {{x2, TimeProfile::cosine(1, 5.0), 0.0}});
  EffectiveHamiltonian eff = effective_hamiltonian(h, {});
  CHECK((eff.h_eff - stat).max_abs_coefficient() < 1e-12);
  CHECK(eff.residual < 1e-9);
}

TEST_CASE("omega=J drive reproduces the pure three-body coefficient") {
  TimeDependentHamiltonian h =
      table_block(1.0, 0.2, -2.1285310408898304, -2.678165158151617);
  EffectiveHamiltonian eff = effective_hamiltonian(h, {});
  CoefficientTable t = coefficient_table(eff);
  CHECK(t.c_zxz == doctest::Approx(-0.2).epsilon(1e-6));
  CHECK(std::abs(t.c_x) < 1e-8);
  CHECK(std::abs(t.c_zz) < 1e-8);
  CHECK(std::abs(t.c_zy) < 1e-8);
  CHECK(t.max_other() < 1e-8);
}

TEST_CASE("cosine drives are symmetric about T/2 so c_zy vanishes") {
  TimeDependentHamiltonian h =
      table_block(2.0, 0.1, -0.15660928207162234, -0.1984060069686025);
  CoefficientTable t = coefficient_table(effective_hamiltonian(h, {}));
  CHECK(std::abs(t.c_zy) < 1e-9);
  CHECK(t.c_zxz == doctest::Approx(-0.2).epsilon(1e-6));
}

TEST_CASE("stroboscopic fidelity grows at most linearly") {
  TimeDependentHamiltonian h = table_block(5.0, 0.04, 1.0, 1.2);
  EffectiveHamiltonian eff = effective_hamiltonian(h, {});
  Eigen::MatrixXcd u = evolve(h, 0.0, eff.period, {});
  Eigen::MatrixXcd step = exp_hermitian(eff.h_eff.to_matrix(), eff.period);
  double base = max_norm(Eigen::MatrixXcd(step - u));
  CHECK(base == doctest::Approx(eff.residual).epsilon(1e-6));
  Eigen::MatrixXcd um = Eigen::MatrixXcd::Identity(8, 8), sm = um;
  for (int m = 1; m <= 10; ++m) {
    um = u * um;
    sm = step * sm;
    CHECK(max_norm(Eigen::MatrixXcd(sm - um)) <= m * base + 1e-13);
  }
}

TEST_CASE("coefficient table projections") {
  EffectiveHamiltonian pure{PauliSum(3, {{"ZXZ", -0.2}}), 1.0, 0.0};
  CoefficientTable t = coefficient_table(pure);
  CHECK(t.c_zxz == doctest::Approx(-0.2));
  CHECK(t.c_x == 0.0);
  CHECK(t.c_zz == 0.0);
  CHECK(t.c_zy == 0.0);
  CHECK(t.other.empty());

  EffectiveHamiltonian ising{PauliSum(3, {{"ZZI", 1.0}, {"IZZ", 1.0}}), 1.0, 0.0};
  CoefficientTable t2 = coefficient_table(ising);
  CHECK(t2.c_zz == doctest::Approx(1.0));
  CHECK(t2.c_x == 0.0);
  CHECK(t2.max_other() == 0.0);
}

TEST_CASE("asymmetric paired strings split into mean plus diagnostics") {
  EffectiveHamiltonian lopsided{PauliSum(3, {{"ZZI", 0.6}, {"IZZ", 0.4}, {"XXX", 0.1}}),
                                1.0, 0.0};
  CoefficientTable t = coefficient_table(lopsided);
  CHECK(t.c_zz == doctest::Approx(0.5));
  CHECK(t.other.at("ZZI") == doctest::Approx(0.1));
  CHECK(t.other.at("IZZ") == doctest::Approx(-0.1));
  CHECK(t.other.at("XXX") == doctest::Approx(0.1));
  // reconstruction is exact
  CHECK((t.reconstruct() - lopsided.h_eff).max_abs_coefficient() < 1e-15);
}

TEST_CASE("coefficient table rejects wrong qubit count") {
  EffectiveHamiltonian wrong{PauliSum(2, {{"ZZ", 1.0}}), 1.0, 0.0};
  CHECK_THROWS_AS(coefficient_table(wrong), dimension_error);
}

TEST_CASE("extraction requires periodic profiles") {
  PauliSum x(1, {{"X", 1.0}});
  TimeDependentHamiltonian h(PauliSum(1),
                             {{x, TimeProfile::delta_pulse(0.5, 0.1, 1e-3), 1.0}});
  CHECK_THROWS_AS(effective_hamiltonian(h, {}), std::invalid_argument);
}

TEST_CASE("relative Hamiltonian distance") {
  PauliSum a(3, {{"ZXZ", -0.2}, {"IXI", 0.01}});
  CHECK(relative_hamiltonian_distance(a, a) == doctest::Approx(0.0).epsilon(1e-14));
  PauliSum b(3, {{"ZXZ", -0.2}});
  // identity components are ignored
  PauliSum a_shifted = a;
  a_shifted.add_term("III", 5.0);
  CHECK(relative_hamiltonian_distance(a_shifted, b) ==
        doctest::Approx(relative_hamiltonian_distance(a, b)).epsilon(1e-12));
  CHECK_THROWS_AS(relative_hamiltonian_distance(b, PauliSum(3)), std::invalid_argument);
}

TEST_SUITE_END();
