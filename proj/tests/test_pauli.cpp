#include <doctest.h>

#include <random>

#include "forge/errors.hpp"
#include "forge/pauli.hpp"
#include "test_util.hpp"

using namespace forge;
using oracle::max_norm;

TEST_SUITE_BEGIN("pauli");

TEST_CASE("single-site product table") {
  // X*Z = -iY, X*X = I
  auto [ph_xz, s_xz] = mul(PauliString("X"), PauliString("Z"));
  CHECK(s_xz.letters == "Y");
  CHECK(std::abs(ph_xz - complexd(0.0, -1.0)) < 1e-15);

  auto [ph_xx, s_xx] = mul(PauliString("X"), PauliString("X"));
  CHECK(s_xx.letters == "I");
  CHECK(std::abs(ph_xx - complexd(1.0)) < 1e-15);

  // exhaustive check against the dense 2x2 oracle
  for (char a : {'I', 'X', 'Y', 'Z'})
    for (char b : {'I', 'X', 'Y', 'Z'}) {
      auto [ph, s] = mul(PauliString(std::string(1, a)), PauliString(std::string(1, b)));
      Eigen::Matrix2cd lhs = oracle::single_letter(a) * oracle::single_letter(b);
      Eigen::Matrix2cd rhs = ph * oracle::single_letter(s.letters[0]);
      CHECK(max_norm(lhs - rhs) < 1e-15);
    }
}

TEST_CASE("multi-site product phase via dense oracle") {
  // (ZZI)*(IXI): the oracle decides the phase
  auto [ph, s] = mul(PauliString("ZZI"), PauliString("IXI"));
  Eigen::MatrixXcd lhs = oracle::string_matrix("ZZI") * oracle::string_matrix("IXI");
  Eigen::MatrixXcd rhs = ph * oracle::string_matrix(s.letters);
  CHECK(max_norm(lhs - rhs) < 1e-14);
  CHECK(s.letters == "ZYI");
}

TEST_CASE("length mismatch throws") {
  CHECK_THROWS_AS(mul(PauliString("XX"), PauliString("X")), dimension_error);
  PauliSum a(2), b(3);
  a.add_term("XI", 1.0);
  b.add_term("XII", 1.0);
  CHECK_THROWS_AS(commutator(a, b), dimension_error);
}

TEST_CASE("commutator closure relations") {
  PauliSum h0(3, {{"ZZI", 1.0}, {"IZZ", 1.0}});
  PauliSum h1(3, {{"IXI", 1.0}});

  // [X2, Z1Z2 + Z2Z3] = -2i (Z1Y2 + Y2Z3)
  PauliSum c1 = commutator(h1, h0);
  CHECK(std::abs(c1.coefficient("ZYI") - complexd(0.0, -2.0)) < 1e-14);
  CHECK(std::abs(c1.coefficient("IYZ") - complexd(0.0, -2.0)) < 1e-14);
  CHECK(c1.terms().size() == 2);

  // [H0, H2] = -4i X2 - 4i Z1X2Z3 with H2 = Z1Y2 + Y2Z3
  PauliSum h2(3, {{"ZYI", 1.0}, {"IYZ", 1.0}});
  PauliSum c2 = commutator(h0, h2);
  CHECK(std::abs(c2.coefficient("IXI") - complexd(0.0, -4.0)) < 1e-14);
  CHECK(std::abs(c2.coefficient("ZXZ") - complexd(0.0, -4.0)) < 1e-14);
  CHECK(c2.terms().size() == 2);

  // antisymmetry
  CHECK(commutator(h0, h0).empty());
}

TEST_CASE("commutator bilinearity, antisymmetry, Jacobi on random sums") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  auto random_sum = [&](int n) {
    PauliSum s(n);
    for (int t = 0; t < 4; ++t)
      s.add_term(oracle::random_string(n, rng), complexd(coeff(rng), coeff(rng)));
    return s;
  };
  auto norm = [](const PauliSum& s) { return s.max_abs_coefficient(); };

  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 3;
    PauliSum a = random_sum(n), b = random_sum(n), c = random_sum(n);
    CHECK(norm(commutator(a, b) + commutator(b, a)) < 1e-12);
    complexd alpha(0.3, -0.4);
    CHECK(norm(commutator(a * alpha + b, c) -
               (commutator(a, c) * alpha + commutator(b, c))) < 1e-12);
    PauliSum jacobi = commutator(a, commutator(b, c)) +
                      commutator(b, commutator(c, a)) +
                      commutator(c, commutator(a, b));
    CHECK(norm(jacobi) < 1e-12);
  }
}

TEST_CASE("iterated commutators of {X2, H0} span a 4-dimensional algebra") {
  PauliSum h0(3, {{"ZZI", 1.0}, {"IZZ", 1.0}});
  PauliSum h1(3, {{"IXI", 1.0}});

  std::vector<PauliSum> generated{h0, h1};
  for (int round = 0; round < 4; ++round) {
    std::vector<PauliSum> next = generated;
    for (std::size_t i = 0; i < generated.size(); ++i)
      for (std::size_t j = i + 1; j < generated.size(); ++j) {
        PauliSum c = commutator(generated[i], generated[j]) * complexd(0.0, 1.0);
        if (!c.empty()) next.push_back(c);
      }
    generated = std::move(next);
  }

  // rank of the coefficient vectors over the 4^3 string basis
  std::vector<std::string> basis;
  for (const auto& g : generated)
    for (const auto& [s, c] : g.terms())
      if (std::find(basis.begin(), basis.end(), s) == basis.end()) basis.push_back(s);
  Eigen::MatrixXd m(generated.size(), 2 * basis.size());
  for (std::size_t i = 0; i < generated.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      complexd c = generated[i].coefficient(basis[j]);
      m(i, 2 * j) = c.real();
      m(i, 2 * j + 1) = c.imag();
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  CHECK(lu.rank() == 4);

  // the span is exactly {H0, H1, H2, H3}
  for (const auto& s : basis)
    CHECK((s == "ZZI" || s == "IZZ" || s == "IXI" || s == "ZYI" || s == "IYZ" ||
           s == "ZXZ"));
}

TEST_CASE("to_matrix basics") {
  PauliSum id2(2, {{"II", 1.0}});
  CHECK(max_norm(id2.to_matrix() - Eigen::MatrixXcd::Identity(4, 4)) < 1e-15);

  PauliSum zz(2, {{"ZZ", 1.0}});
  Eigen::VectorXcd diag = zz.to_matrix().diagonal();
  CHECK(std::abs(diag(0) - 1.0) < 1e-15);
  CHECK(std::abs(diag(1) + 1.0) < 1e-15);
  CHECK(std::abs(diag(2) + 1.0) < 1e-15);
  CHECK(std::abs(diag(3) - 1.0) < 1e-15);
}

TEST_CASE("Ising chain spectrum from brute-force enumeration") {
  PauliSum h(3, {{"ZZI", 1.0}, {"IZZ", 1.0}});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.to_matrix());

  // oracle: diagonal entries z1 z2 + z2 z3 over all sign patterns
  std::vector<double> expected;
  for (int b = 0; b < 8; ++b) {
    double z1 = (b & 4) ? -1 : 1, z2 = (b & 2) ? -1 : 1, z3 = (b & 1) ? -1 : 1;
    expected.push_back(z1 * z2 + z2 * z3);
  }
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < 8; ++i) CHECK(std::abs(es.eigenvalues()(i) - expected[i]) < 1e-12);
  CHECK(std::count(expected.begin(), expected.end(), -2.0) == 2);
  CHECK(std::count(expected.begin(), expected.end(), 0.0) == 4);
  CHECK(std::count(expected.begin(), expected.end(), 2.0) == 2);
}

TEST_CASE("to_matrix matches the independent Kronecker oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + trial % 4;
    std::string s = oracle::random_string(n, rng);
    PauliSum p(n, {{s, complexd(0.7, -0.2)}});
    CHECK(max_norm(p.to_matrix() - complexd(0.7, -0.2) * oracle::string_matrix(s)) <
          1e-14);
  }
}

TEST_CASE("to_matrix cap") {
  PauliSum big(13);
  big.add_term(std::string(13, 'Z'), 1.0);
  CHECK_THROWS_AS(big.to_matrix(), resource_error);
  CHECK_NOTHROW(big.to_matrix(13));
}

TEST_CASE("decompose basics") {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  PauliSum p = PauliSum::decompose(x);
  CHECK(p.terms().size() == 1);
  CHECK(std::abs(p.coefficient("X") - complexd(1.0)) < 1e-15);

  PauliSum zxz(3, {{"ZXZ", 0.3}});
  PauliSum back = PauliSum::decompose(zxz.to_matrix());
  CHECK(back.terms().size() == 1);
  CHECK(std::abs(back.coefficient("ZXZ") - complexd(0.3)) < 1e-14);

  Eigen::MatrixXcd odd = Eigen::MatrixXcd::Zero(3, 3);
  CHECK_THROWS_AS(PauliSum::decompose(odd), dimension_error);
}

TEST_CASE("decompose reconstructs a random Hermitian matrix") {
  std::mt19937 rng(23);
  Eigen::MatrixXcd m = oracle::random_hermitian(8, rng);
  PauliSum p = PauliSum::decompose(m);
  CHECK(p.is_hermitian());
  Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(8, 8);
  for (const auto& [s, c] : p.terms()) rebuilt += c * oracle::string_matrix(s);
  CHECK(max_norm(rebuilt - m) < 1e-12);
}

TEST_CASE("round trip decompose(to_matrix) up to six qubits") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int n = 1; n <= 6; ++n) {
    PauliSum p(n);
    for (int t = 0; t < 5; ++t)
      p.add_term(oracle::random_string(n, rng), complexd(coeff(rng), coeff(rng)));
    PauliSum q = PauliSum::decompose(p.to_matrix());
    CHECK((q - p).max_abs_coefficient() < 1e-12);
  }
}

TEST_CASE("string orthogonality") {
  std::mt19937 rng(41);
  // exhaustive at n = 2
  std::vector<std::string> all;
  for (char a : {'I', 'X', 'Y', 'Z'})
    for (char b : {'I', 'X', 'Y', 'Z'}) all.push_back(std::string{a, b});
  for (const auto& p : all)
    for (const auto& q : all) {
      double tr =
          (oracle::string_matrix(p) * oracle::string_matrix(q)).trace().real() / 4.0;
      CHECK(std::abs(tr - (p == q ? 1.0 : 0.0)) < 1e-14);
      PauliSum ps(2, {{p, 1.0}}), qs(2, {{q, 1.0}});
      CHECK(std::abs(normalized_trace_product(ps, qs) - complexd(p == q ? 1.0 : 0.0)) <
            1e-14);
    }
}

TEST_CASE("hermitian flag tracks imaginary parts") {
  PauliSum p(2, {{"XZ", 0.5}, {"YI", -1.25}});
  CHECK(p.is_hermitian());
  p.add_term("ZZ", complexd(0.0, 1e-6));
  CHECK_FALSE(p.is_hermitian());
  PauliSum q(2, {{"XZ", complexd(1.0, 5e-13)}});
  CHECK(q.is_hermitian());  // below the 1e-12 tolerance
}

TEST_CASE("term merging and pruning") {
  PauliSum p(2);
  p.add_term("XZ", 0.5);
  p.add_term("XZ", 0.5);
  CHECK(p.terms().size() == 1);
  CHECK(std::abs(p.coefficient("XZ") - complexd(1.0)) < 1e-15);
  p.add_term("XZ", -1.0);
  CHECK(p.empty());
  p.add_term("YY", 1e-15);  // below the prune threshold
  CHECK(p.empty());
}

TEST_CASE("JSON serialization round trip") {
  PauliSum p(3, {{"ZXZ", -0.2}, {"IXI", complexd(0.0, 0.25)}});
  nlohmann::ordered_json j;
  to_json(j, p);
  CHECK(j["n"] == 3);
  CHECK(j["terms"][0]["string"] == "IXI");
  PauliSum q = pauli_sum_from_json(j);
  CHECK((q - p).max_abs_coefficient() < 1e-15);
}

TEST_SUITE_END();
