#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

// Dense oracles built from first principles, independent of the library's
// to_matrix/decompose path.
namespace oracle {

using complexd = std::complex<double>;

inline Eigen::Matrix2cd single_letter(char c) {
  Eigen::Matrix2cd m;
  const complexd i{0.0, 1.0};
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad letter");
  }
  return m;
}

// Kronecker product with site 1 leftmost.
inline Eigen::MatrixXcd string_matrix(const std::string& s) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  for (char c : s) {
    Eigen::Matrix2cd f = single_letter(c);
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(2 * i, 2 * j, 2, 2) = out(i, j) * f;
    out = next;
  }
  return out;
}

inline double max_norm(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Eigen::MatrixXcd random_hermitian(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = complexd(gauss(rng), gauss(rng));
  return (a + a.adjoint()) * 0.5;
}

inline std::string random_string(int n, std::mt19937& rng) {
  static const char letters[] = "IXYZ";
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s(n, 'I');
  for (auto& c : s) c = letters[pick(rng)];
  return s;
}

}  // namespace oracle
