#include "carlitz/special.hpp"

#include <algorithm>

namespace carlitz {

SpecialFnConfig SpecialFnConfig::make(const Field& F, i64 M, i64 N) {
  if (M < 4 || N < 1) throw ConfigError("special-function truncations too small");
  i64 J = 1, qJ = F.q();
  while (qJ < M + N) {
    qJ *= F.q();
    ++J;
  }
  return SpecialFnConfig{&F, J, M, N};
}

SpecialFnConfig SpecialFnConfig::with_cutoff(const Field& F, i64 M, i64 N, i64 J) {
  if (M < 4 || N < 1 || J < 1) throw ConfigError("special-function truncations too small");
  i64 qJ = 1;
  for (i64 i = 0; i < J; ++i) {
    qJ *= F.q();
    if (qJ > kExactPrec / F.q()) break;
  }
  if (qJ < M + N / (F.q() - 1) + (N % (F.q() - 1) != 0))
    throw ConfigError("cutoff J does not dominate the truncation scales");
  return SpecialFnConfig{&F, J, M, N};
}

TSeries omega_big(const SpecialFnConfig& cfg) {
  const Field& F = *cfg.F;
  const i64 q = F.q();
  const LaurentU theta = LaurentU::theta(F);
  TSeries prod = TSeries::constant(F, LaurentU::lambda(F).power(-q));
  i64 qj = 1;
  for (i64 j = 1; j <= cfg.J; ++j) {
    qj *= q;
    const TSeries factor = TSeries::from_coeffs(
        F, {LaurentU::one(F), -theta.power(-qj)}, Kind::polynomial, 0);
    prod = TSeries::mul(prod, factor);
  }
  // The dropped factors perturb coefficient m >= 1 only past (q-1) q^{J+1},
  // which dominates the per-coefficient cap N + m(q-1) by the choice of J.
  std::vector<LaurentU> out;
  out.reserve(static_cast<std::size_t>(cfg.M));
  for (i64 m = 0; m < cfg.M; ++m) out.push_back(prod.coeff(m).truncated(cfg.N + m * (q - 1)));
  return TSeries::from_coeffs(F, std::move(out), Kind::series, cfg.M);
}

TSeries omega_small(const SpecialFnConfig& cfg) {
  const Field& F = *cfg.F;
  const TSeries a = TSeries::t_minus_theta(F) * omega_big(cfg);
  return a.inverse();
}

LaurentU pi_tilde(const SpecialFnConfig& cfg) {
  const Field& F = *cfg.F;
  const i64 q = F.q();
  const LaurentU theta = LaurentU::theta(F);
  LaurentU acc = LaurentU::lambda(F) * theta;
  const i64 work = cfg.N + 2 * q + 4;
  i64 qj = 1;
  for (i64 j = 1; j <= cfg.J; ++j) {
    qj *= q;
    const LaurentU factor = LaurentU::one(F) - theta.power(1 - qj);
    acc = acc * factor.inverse(work);
  }
  return acc.truncated(cfg.N);
}

TSeries beta_poly(const Field& F, i64 d) {
  const LaurentU theta = LaurentU::theta(F);
  TSeries prod = TSeries::constant(F, LaurentU::one(F));
  i64 qh = 1;
  for (i64 h = 0; h < d; ++h) {
    const TSeries factor =
        TSeries::from_coeffs(F, {-theta.power(qh), LaurentU::one(F)}, Kind::polynomial, 0);
    prod = TSeries::mul(prod, factor);
    qh *= F.q();
  }
  return prod;
}

SpecialBundle SpecialBundle::build(const SpecialFnConfig& cfg) {
  SpecialBundle S;
  S.cfg = cfg;
  S.Omega = omega_big(cfg);
  const TSeries a = TSeries::t_minus_theta(*cfg.F) * S.Omega;
  S.omega = a.inverse();
  S.pi = pi_tilde(cfg);
  const i64 q = cfg.F->q();
  if (!validate_coeff_floor(S.Omega, [q](i64 m) { return Omega_pow_coeff_floor(q, 1, m); }))
    throw Error("companion-function coefficients violate the certified floor");
  if (!validate_coeff_floor(S.omega, [q](i64 m) { return omega_coeff_floor(q, m); }))
    throw Error("Anderson-Thakur coefficients violate the certified floor");
  return S;
}

TSeries xi_fn(i64 n, i64 d, const SpecialBundle& S) {
  const Field& F = *S.cfg.F;
  const TSeries beta = beta_poly(F, d);
  TSeries acc = TSeries::zero(F);
  for (i64 l = 1; l <= n; ++l)
    acc = acc + beta.hyperderive(l) * S.omega.hyperderive(n - l);
  return acc;
}

i64 omega_coeff_floor(i64 q, i64 m) { return (q - 1) * m - 1; }

i64 omega_zeta_tail(i64 q, i64 M) { return (q - 1) * M - 1; }

i64 Omega_pow_coeff_floor(i64 q, i64 s, i64 m) { return s * q + m * q * (q - 1); }

i64 Omega_pow_theta_tail(i64 q, i64 s, i64 j, i64 M) {
  return s * q + j * q * (q - 1) + (M - j) * (q - 1) * (q - 1);
}

i64 xi_zeta_tail(i64 q, i64 d, i64 M) {
  i64 qd = 1;
  for (i64 h = 0; h < d; ++h) qd *= q;
  return (M - d) * (q - 1) - (qd - 1) - 1;
}

bool validate_coeff_floor(const TSeries& f, const std::function<i64(i64)>& floor) {
  for (i64 m = 0; m < f.size(); ++m) {
    const auto& c = f.coeff(m);
    if (c.known_nonzero() && *c.valuation() < floor(m)) return false;
  }
  return true;
}

}  // namespace carlitz
