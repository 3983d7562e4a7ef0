#pragma once

#include "carlitz/special.hpp"

namespace carlitz {

struct TorsionReport {
  FieldElem zeta;
  i64 zeta_degree = 0;  // degree of the minimal polynomial of zeta over F_q
  i64 n = 0;            // hyperderivative order; 0 is the base relation
  bool pass = false;
  std::optional<i64> residual_valuation;
  i64 precision = 0;
};

// Root relation at a root of unity: omega(zeta)^{q^d - 1} - beta(zeta), where
// d is the degree of zeta over F_q. Only the root relation is checked;
// minimality of the polynomial is out of computational reach.
TorsionReport omega_at_zeta_relation(FieldElem zeta, const SpecialBundle& S);

// Additive relation for the n-th hyperderivative:
// (d^n omega)(zeta)^{q^d} - beta(zeta) (d^n omega)(zeta) - xi_n(zeta).
TorsionReport hyper_omega_at_zeta_relation(FieldElem zeta, i64 n, const SpecialBundle& S);

// All relations over the (zeta, n) grid: zeta runs over elements of exact
// degree d (at most zeta_cap of them), n over 0..nmax.
std::vector<TorsionReport> torsion_grid(i64 nmax, const SpecialBundle& S,
                                        std::size_t zeta_cap = 4);

}  // namespace carlitz
