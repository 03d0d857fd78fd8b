#pragma once

#include <map>
#include <string>

#include "forge/prop.hpp"

namespace forge {

// Time-independent generator of the one-period propagator, in units of J.
struct EffectiveHamiltonian {
  PauliSum h_eff;
  double period = 0.0;
  double residual = 0.0;  // max-norm of exp(-i*H_eff*T) - U(T)
};

// Projection of a 3-spin effective Hamiltonian onto the span
// {X2, Z1Z2+Z2Z3, Z1Y2+Y2Z3, Z1X2Z3}; everything else lands in `other`.
struct CoefficientTable {
  double c_x = 0.0, c_zz = 0.0, c_zy = 0.0, c_zxz = 0.0;
  std::map<std::string, double> other;

  double max_other() const;
  PauliSum reconstruct() const;  // exact by construction
};

// H_eff = log(U(T))/( -i T ) decomposed into Pauli strings. All profiles
// must be T-periodic for the common period T = 2*pi/omega.
EffectiveHamiltonian effective_hamiltonian(const TimeDependentHamiltonian& h,
                                           const StepControl& sc);

CoefficientTable coefficient_table(const EffectiveHamiltonian& e);

// Relative distance |1 - tr(h*h0)/tr(h0^2)| between effective Hamiltonians,
// taken over non-identity strings (the identity component is a global phase).
double relative_hamiltonian_distance(const PauliSum& h, const PauliSum& h0);

}  // namespace forge
