#include "forge/pauli.hpp"

#include <array>
#include <cmath>
#include <cstdint>

#include "forge/errors.hpp"

namespace forge {

namespace {

constexpr complexd kI{0.0, 1.0};

int letter_index(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: throw dimension_error(std::string("invalid Pauli letter '") + c + "'");
  }
}

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

// Single-site product table: P_a * P_b = phase * P_c.
// Cyclic pairs (X,Y)->Z, (Y,Z)->X, (Z,X)->Y carry +i, anticyclic -i.
struct SiteProduct {
  complexd phase;
  char letter;
};

SiteProduct site_mul(int a, int b) {
  if (a == 0) return {1.0, kLetters[b]};
  if (b == 0) return {1.0, kLetters[a]};
  if (a == b) return {1.0, 'I'};
  int c = 6 - a - b;  // the remaining letter index
  bool cyclic = (b - a + 3) % 3 == 1;  // X->Y->Z->X
  return {cyclic ? kI : -kI, kLetters[c]};
}

}  // namespace

PauliString::PauliString(std::string s) : letters(std::move(s)) {
  for (char c : letters) letter_index(c);
}

bool PauliString::is_identity() const {
  return letters.find_first_not_of('I') == std::string::npos;
}

PauliString PauliString::identity(int n) {
  return PauliString(std::string(static_cast<std::size_t>(n), 'I'));
}

std::pair<complexd, PauliString> mul(const PauliString& a, const PauliString& b) {
  if (a.n() != b.n())
    throw dimension_error("Pauli string length mismatch: " + std::to_string(a.n()) +
                          " vs " + std::to_string(b.n()));
  complexd phase{1.0, 0.0};
  std::string out(a.letters.size(), 'I');
  for (std::size_t k = 0; k < a.letters.size(); ++k) {
    SiteProduct p = site_mul(letter_index(a.letters[k]), letter_index(b.letters[k]));
    phase *= p.phase;
    out[k] = p.letter;
  }
  return {phase, PauliString(std::move(out))};
}

PauliSum::PauliSum(int n) : n_(n) {
  if (n < 1) throw dimension_error("qubit count must be >= 1");
}

PauliSum::PauliSum(int n, std::initializer_list<std::pair<std::string, complexd>> terms)
    : PauliSum(n) {
  for (const auto& [s, c] : terms) add_term(s, c);
}

complexd PauliSum::coefficient(const std::string& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? complexd(0.0) : it->second;
}

void PauliSum::add_term(const std::string& s, complexd c) {
  if (static_cast<int>(s.size()) != n_)
    throw dimension_error("term length " + std::to_string(s.size()) +
                          " does not match qubit count " + std::to_string(n_));
  for (char ch : s) letter_index(ch);
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

PauliSum PauliSum::operator+(const PauliSum& rhs) const {
  if (n_ != rhs.n_) throw dimension_error("qubit count mismatch in sum");
  PauliSum out = *this;
  for (const auto& [s, c] : rhs.terms_) out.add_term(s, c);
  return out;
}

PauliSum PauliSum::operator-(const PauliSum& rhs) const {
  return *this + rhs * complexd(-1.0);
}

PauliSum PauliSum::operator*(complexd scale) const {
  PauliSum out(n_);
  for (const auto& [s, c] : terms_) out.add_term(s, c * scale);
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Eigen::MatrixXcd PauliSum::to_matrix(int n_cap) const {
  if (n_ > n_cap)
    throw resource_error("dense realization of " + std::to_string(n_) +
                         " qubits exceeds cap " + std::to_string(n_cap));
  const std::int64_t dim = std::int64_t{1} << n_;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  // Every string has one nonzero per row: column = row ^ xmask, value from
  // the Y/Z letters (site 1 is the most significant bit).
  for (const auto& [s, c] : terms_) {
    std::int64_t xmask = 0;
    for (int k = 0; k < n_; ++k)
      if (s[k] == 'X' || s[k] == 'Y') xmask |= std::int64_t{1} << (n_ - 1 - k);
    for (std::int64_t row = 0; row < dim; ++row) {
      complexd v = c;
      for (int k = 0; k < n_; ++k) {
        int bit = (row >> (n_ - 1 - k)) & 1;
        char l = s[k];
        if (l == 'Y') v *= bit ? kI : -kI;
        else if (l == 'Z' && bit) v = -v;
      }
      out(row, row ^ xmask) += v;
    }
  }
  return out;
}

PauliSum PauliSum::decompose(const Eigen::MatrixXcd& m) {
  const std::int64_t dim = m.rows();
  if (dim != m.cols()) throw dimension_error("matrix must be square");
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw dimension_error("matrix dimension must be a power of two >= 2");
  int n = 0;
  while ((std::int64_t{1} << n) < dim) ++n;

  PauliSum out(n);
  const std::int64_t strings = std::int64_t{1} << (2 * n);
  std::string s(static_cast<std::size_t>(n), 'I');
  for (std::int64_t code = 0; code < strings; ++code) {
    std::int64_t xmask = 0;
    std::int64_t rest = code;
    for (int k = n - 1; k >= 0; --k) {
      int l = rest & 3;
      rest >>= 2;
      s[k] = kLetters[l];
      if (l == 1 || l == 2) xmask |= std::int64_t{1} << (n - 1 - k);
    }
    // tr(P*M) = sum_row P[row, row^xmask] * M[row^xmask, row]
    complexd tr{0.0, 0.0};
    for (std::int64_t row = 0; row < dim; ++row) {
      complexd v{1.0, 0.0};
      for (int k = 0; k < n; ++k) {
        int bit = (row >> (n - 1 - k)) & 1;
        char l = s[k];
        if (l == 'Y') v *= bit ? kI : -kI;
        else if (l == 'Z' && bit) v = -v;
      }
      tr += v * m(row ^ xmask, row);
    }
    complexd c = tr / static_cast<double>(dim);
    if (std::abs(c) >= kPruneThreshold) out.add_term(s, c);
  }
  return out;
}

std::string PauliSum::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") +
           std::to_string(c.imag()) + "i)*" + s;
  }
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  if (a.n() != b.n()) throw dimension_error("qubit count mismatch in commutator");
  PauliSum out(a.n());
  for (const auto& [sa, ca] : a.terms()) {
    PauliString pa(sa);
    for (const auto& [sb, cb] : b.terms()) {
      PauliString pb(sb);
      auto [ph_ab, prod] = mul(pa, pb);
      auto [ph_ba, prod2] = mul(pb, pa);
      complexd delta = ph_ab - ph_ba;  // 0 or 2*ph_ab
      if (delta != complexd(0.0)) out.add_term(prod, ca * cb * delta);
    }
  }
  return out;
}

complexd normalized_trace_product(const PauliSum& a, const PauliSum& b) {
  if (a.n() != b.n()) throw dimension_error("qubit count mismatch in trace product");
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  complexd out{0.0, 0.0};
  for (const auto& [s, c] : small.terms()) out += c * large.coefficient(s);
  return out;
}

void to_json(nlohmann::ordered_json& j, const PauliSum& s) {
  j = nlohmann::ordered_json{{"n", s.n()}, {"terms", nlohmann::ordered_json::array()}};
  for (const auto& [str, c] : s.terms())
    j["terms"].push_back({{"string", str}, {"re", c.real()}, {"im", c.imag()}});
}

PauliSum pauli_sum_from_json(const nlohmann::json& j) {
  PauliSum out(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    out.add_term(t.at("string").get<std::string>(),
                 complexd(t.at("re").get<double>(), t.at("im").get<double>()));
  return out;
}

}  // namespace forge
