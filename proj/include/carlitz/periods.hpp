#pragma once

#include "carlitz/blockmat.hpp"
#include "carlitz/special.hpp"

namespace carlitz {

// Period-lattice coordinates of the n-th Carlitz tensor power, normalized so
// the last coordinate is pi_tilde^n.
struct PeriodVector {
  i64 n = 0;
  std::vector<LaurentU> z;  // z[i-1] holds z_i
};

// Hyperderivative route: z_i = (-1)^n d^{n-i}((t-theta)^n omega^n) |_{t=theta}.
PeriodVector period_coordinates(i64 n, const SpecialBundle& S);

// Recentering route through the Laurent expansion of omega^n around t = theta:
// z_i = (-1)^n c_{-i}. Kept permanently as a cross-validation of the first
// route, not just as a test.
PeriodVector period_coordinates_recentered(i64 n, const SpecialBundle& S);

struct ToeplitzReport {
  bool pass = false;
  std::optional<i64> residual_valuation;
  i64 precision = 0;
};

// Inverts the n x n matrix of evaluated jets of Omega^n at theta and compares
// against (-1)^n times the upper-triangular Toeplitz matrix of the period
// coordinates. Throws SingularMatrix when the evaluation of Omega is
// indistinguishable from zero at the tracked precision.
ToeplitzReport toeplitz_inverse_identity(i64 n, const SpecialBundle& S);

struct VanishingReport {
  i64 n = 0;
  i64 ps = 1;          // exact power of p dividing n
  i64 threshold = 0;   // valuations at or above this count as zero
  std::vector<bool> zero;
  bool pattern_pass = false;  // z_i is zero exactly when ps does not divide i
  bool power_pass = false;    // z_{ps m}(n) equals z_m(n/ps)^{ps}
  bool pass = false;
};

// Characteristic-p vanishing pattern of the period coordinates.
VanishingReport vanishing_pattern(i64 n, const SpecialBundle& S, i64 N_target);

struct PowerLemmaReport {
  i64 s = 0;  // smallest power with p^s > k
  i64 a = 0, b = 0;  // a p^s + b n = 1
  bool scalar_pass = false;    // jet image of f^{p^s} is scalar
  bool identity_pass = false;  // rho(f) = (f^{p^s})^a * rho(f^n)^b
  std::optional<i64> residual_valuation;
  i64 precision = 0;
};

// Finite-extension relation between the jets of f and of f^n for n prime to q.
PowerLemmaReport frobenius_power_lemma_check(const TSeries& f, i64 n, i64 k,
                                             i64 tprec_target = kNoBound, i64 u_prec = kNoBound);

}  // namespace carlitz
