#pragma once

#include <functional>

#include "carlitz/tseries.hpp"

namespace carlitz {

// Truncation controls for the defining infinite products. The cutoff J must
// dominate both truncation scales: factors beyond it only touch coefficients
// past the t- and u-windows.
struct SpecialFnConfig {
  const Field* F = nullptr;
  i64 J = 0;  // product cutoff index
  i64 M = 0;  // t-truncation
  i64 N = 0;  // u-precision target

  // Smallest J with q^J >= M + N.
  static SpecialFnConfig make(const Field& F, i64 M, i64 N);
  // Explicit cutoff; validates q^J >= M + N/(q-1).
  static SpecialFnConfig with_cutoff(const Field& F, i64 M, i64 N, i64 J);
};

// Entire companion function: lambda^{-q} * prod_{j>=1} (1 - t/theta^{q^j}),
// satisfying sigma(Omega) = (t-theta) Omega and Omega(theta) = -1/pi_tilde.
// Coefficient m is carried at absolute precision N + m(q-1), anticipating the
// valuation the power theta^m spends at evaluation time.
TSeries omega_big(const SpecialFnConfig& cfg);

// Anderson-Thakur function, computed by series inversion of (t-theta)*Omega;
// satisfies omega^tau = (t-theta) omega.
TSeries omega_small(const SpecialFnConfig& cfg);

// Carlitz period: lambda * theta * prod_{j>=1} (1 - theta^{1-q^j})^{-1},
// truncated to absolute precision N.
LaurentU pi_tilde(const SpecialFnConfig& cfg);

// beta(t) = prod_{h=0}^{d-1} (t - theta^{q^h}), exact polynomial.
TSeries beta_poly(const Field& F, i64 d);

struct SpecialBundle {
  SpecialFnConfig cfg;
  TSeries Omega;
  TSeries omega;
  LaurentU pi;

  // Builds all three once and validates the coefficient-valuation floors
  // below against the stored coefficients.
  static SpecialBundle build(const SpecialFnConfig& cfg);
};

// xi_n(t) = sum_{l=1}^n d^l(beta) * d^{n-l}(omega).
TSeries xi_fn(i64 n, i64 d, const SpecialBundle& S);

// Coefficient-valuation floors certified by the defining products, and the
// evaluation tail bounds they induce.
i64 omega_coeff_floor(i64 q, i64 m);                   // v(omega_m) >= (q-1)m - 1
i64 omega_zeta_tail(i64 q, i64 M);                     // tail of d^n(omega) at a constant
i64 Omega_pow_coeff_floor(i64 q, i64 s, i64 m);        // v((Omega^s)_m) >= s q + m q(q-1)
i64 Omega_pow_theta_tail(i64 q, i64 s, i64 j, i64 M);  // tail of d^j(Omega^s) at theta
i64 xi_zeta_tail(i64 q, i64 d, i64 M);                 // tail of xi_n at a constant

// True iff every known nonzero stored coefficient respects the floor.
bool validate_coeff_floor(const TSeries& f, const std::function<i64(i64)>& floor);

}  // namespace carlitz
