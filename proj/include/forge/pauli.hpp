#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace forge {

using complexd = std::complex<double>;

// Coefficients below this magnitude are dropped after arithmetic so sums
// stay canonical.
inline constexpr double kPruneThreshold = 1e-14;

// An N-site Pauli string, e.g. "ZXZ" with site 1 leftmost.
struct PauliString {
  std::string letters;

  PauliString() = default;
  explicit PauliString(std::string s);

  int n() const { return static_cast<int>(letters.size()); }
  bool is_identity() const;
  static PauliString identity(int n);

  bool operator==(const PauliString&) const = default;
  auto operator<=>(const PauliString&) const = default;
};

// Sitewise product a*b = phase * c with phase in {1, -1, i, -i}.
std::pair<complexd, PauliString> mul(const PauliString& a, const PauliString& b);

// Operator as a weighted sum of N-site Pauli strings. Terms are kept in
// lexicographic string order and pruned at kPruneThreshold; values are
// treated as immutable once built, so concurrent reads are safe.
class PauliSum {
 public:
  explicit PauliSum(int n);
  PauliSum(int n, std::initializer_list<std::pair<std::string, complexd>> terms);

  int n() const { return n_; }
  const std::map<std::string, complexd>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  complexd coefficient(const std::string& s) const;

  // Merges (and prunes) a term; used while assembling a sum.
  void add_term(const std::string& s, complexd c);
  void add_term(const PauliString& s, complexd c) { add_term(s.letters, c); }

  PauliSum operator+(const PauliSum& rhs) const;
  PauliSum operator-(const PauliSum& rhs) const;
  PauliSum operator*(complexd scale) const;

  // True when every coefficient is real to within tol (Pauli strings are
  // Hermitian, so this is the Hermiticity condition).
  bool is_hermitian(double tol = 1e-12) const;

  double max_abs_coefficient() const;

  // Dense Kronecker realization. Throws resource_error above the cap.
  Eigen::MatrixXcd to_matrix(int n_cap = 12) const;

  // Inverse of to_matrix: c_P = tr(P*M)/2^N over all 4^N strings.
  static PauliSum decompose(const Eigen::MatrixXcd& m);

  std::string to_text() const;

  bool operator==(const PauliSum&) const = default;

 private:
  int n_ = 0;
  std::map<std::string, complexd> terms_;
};

// [A, B] = AB - BA, canonicalized and pruned.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

// tr(A*B)/2^N via string orthogonality (no conjugation).
complexd normalized_trace_product(const PauliSum& a, const PauliSum& b);

void to_json(nlohmann::ordered_json& j, const PauliSum& s);
PauliSum pauli_sum_from_json(const nlohmann::json& j);

}  // namespace forge
