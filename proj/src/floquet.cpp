#include "forge/floquet.hpp"

#include <cmath>

#include "forge/errors.hpp"

namespace forge {

double CoefficientTable::max_other() const {
  double m = 0.0;
  for (const auto& [s, c] : other) m = std::max(m, std::abs(c));
  return m;
}

PauliSum CoefficientTable::reconstruct() const {
  PauliSum out(3);
  out.add_term("IXI", c_x);
  out.add_term("ZZI", c_zz);
  out.add_term("IZZ", c_zz);
  out.add_term("ZYI", c_zy);
  out.add_term("IYZ", c_zy);
  out.add_term("ZXZ", c_zxz);
  for (const auto& [s, c] : other) out.add_term(s, c);
  return out;
}

EffectiveHamiltonian effective_hamiltonian(const TimeDependentHamiltonian& h,
                                           const StepControl& sc) {
  for (const auto& d : h.driven())
    if (!d.profile.periodic())
      throw std::invalid_argument(
          "effective Hamiltonian requires T-periodic profiles");
  double t_period = h.period();
  Eigen::MatrixXcd u = evolve(h, 0.0, t_period, sc);
  Eigen::MatrixXcd gen = log_unitary(u, t_period);
  double residual = max_abs(Eigen::MatrixXcd(exp_hermitian(gen, t_period) - u));
  return EffectiveHamiltonian{PauliSum::decompose(gen), t_period, residual};
}

double relative_hamiltonian_distance(const PauliSum& h, const PauliSum& h0) {
  if (h.n() != h0.n()) throw dimension_error("qubit count mismatch");
  const std::string identity(static_cast<std::size_t>(h.n()), 'I');
  double num = 0.0, den = 0.0;
  for (const auto& [s, c] : h0.terms()) {
    if (s == identity) continue;
    den += c.real() * c.real();
    num += c.real() * h.coefficient(s).real();
  }
  if (den == 0.0) throw std::invalid_argument("reference Hamiltonian is zero");
  return std::abs(1.0 - num / den);
}

CoefficientTable coefficient_table(const EffectiveHamiltonian& e) {
  if (e.h_eff.n() != 3)
    throw dimension_error("coefficient table requires a 3-spin Hamiltonian");
  CoefficientTable t;
  t.c_x = e.h_eff.coefficient("IXI").real();
  t.c_zxz = e.h_eff.coefficient("ZXZ").real();
  // Paired strings are reported symmetrized; any imbalance is a diagnostic
  // and stays visible in `other`.
  double zz1 = e.h_eff.coefficient("ZZI").real();
  double zz2 = e.h_eff.coefficient("IZZ").real();
  double zy1 = e.h_eff.coefficient("ZYI").real();
  double zy2 = e.h_eff.coefficient("IYZ").real();
  t.c_zz = 0.5 * (zz1 + zz2);
  t.c_zy = 0.5 * (zy1 + zy2);
  if (zz1 != t.c_zz) {
    t.other["ZZI"] = zz1 - t.c_zz;
    t.other["IZZ"] = zz2 - t.c_zz;
  }
  if (zy1 != t.c_zy) {
    t.other["ZYI"] = zy1 - t.c_zy;
    t.other["IYZ"] = zy2 - t.c_zy;
  }
  for (const auto& [s, c] : e.h_eff.terms()) {
    if (s == "IXI" || s == "ZXZ" || s == "ZZI" || s == "IZZ" || s == "ZYI" ||
        s == "IYZ")
      continue;
    t.other[s] = c.real();
  }
  return t;
}

}  // namespace forge
