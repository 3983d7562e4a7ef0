#pragma once

#include <optional>
#include <vector>

#include "carlitz/blockmat.hpp"

namespace carlitz {

// Descriptors hold the action matrix w.r.t. a fixed basis; basis changes are
// out of scope since every verified statement is basis-explicit.

struct MotiveDesc {
  i64 rank = 0;
  BlockMat theta;  // tau-action: tau(e) = e * theta
  std::optional<i64> divisibility_ell;  // (t-theta)^ell divisibility witness, metadata only
};

struct DualMotiveDesc {
  i64 rank = 0;
  BlockMat theta_tilde;  // sigma-action: sigma(e) = e * theta_tilde
};

struct TModuleDesc {
  i64 dim = 0;
  std::vector<BlockMat> A;  // t-action A[0] + A[1] tau + ... + A[s] tau^s, entries t-free
};

enum class TrivFlavor { tau_side, sigma_side };

struct Trivialization {
  BlockMat mat;  // Upsilon (tau side, theta * Upsilon^tau = Upsilon)
                 // or Psi (sigma side, Psi * theta_tilde = Psi^sigma)
  TrivFlavor flavor = TrivFlavor::tau_side;
};

// Carlitz tensor-power fixtures: rank 1 with action (t - theta)^n.
MotiveDesc carlitz_motive(const Field& F, i64 n);
DualMotiveDesc carlitz_dual(const Field& F, i64 n);
TModuleDesc carlitz_tmodule(const Field& F);  // A0 = theta, A1 = 1

// k-th prolongation: rank r(k+1) with the jet image of the action matrix.
MotiveDesc prolong_motive(const MotiveDesc& M, i64 k);
DualMotiveDesc prolong_dual(const DualMotiveDesc& M, i64 k);

// k-th prolongation of a t-module: dimension d(k+1); the t-free part gains
// -1_d subdiagonal blocks, the tau-parts become block diagonal.
TModuleDesc prolong_tmodule(const TModuleDesc& E, i64 k);

Trivialization prolong_trivialization(const Trivialization& T, i64 k);

// Residual of theta * Upsilon^tau - Upsilon (tau side), respectively
// Psi * theta_tilde - Psi^sigma (sigma side), at the common tracked precision.
Residual verify_trivialization(const MotiveDesc& M, const Trivialization& T);
Residual verify_trivialization(const DualMotiveDesc& M, const Trivialization& T);

// (A0 - theta)^dim == 0, exactly.
bool tmodule_nilpotency_check(const TModuleDesc& E);

// Truncated series in 1/t over the coefficient field: sum c[i] * t^{-(lead+i)}.
// Only the handful of operations the purity check needs.
struct InvTSeries {
  i64 lead = 0;
  std::vector<LaurentU> c;
};

InvTSeries invt_constant(const Field& F, LaurentU x);
InvTSeries invt_monomial(const Field& F, LaurentU x, i64 inv_t_exp);

struct PurityReport {
  bool pass = false;
  bool nonneg = false;      // every block entry has nonnegative 1/t-valuation
  bool invertible = false;  // assembled matrix invertible over power series in 1/t
  std::optional<i64> min_valuation;
};

// Checks that every block t^{-u} d^n(t^u A) of the prolonged lattice matrix
// stays in power series in 1/t and that the assembled block matrix is
// invertible there (constant-term matrix invertible over the coefficient
// field). v is the twist exponent of the weight u/v lattice equation and is
// recorded only.
PurityReport purity_prolong_check(const Field& F, const std::vector<std::vector<InvTSeries>>& A,
                                  i64 u, i64 v, i64 k);

}  // namespace carlitz
