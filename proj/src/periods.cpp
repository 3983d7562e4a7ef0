#include "carlitz/periods.hpp"

#include <numeric>

namespace carlitz {

namespace {

FieldElem parity_sign(const Field& F, i64 n) {
  return (n & 1) ? F.neg(F.one()) : F.one();
}

}  // namespace

PeriodVector period_coordinates(i64 n, const SpecialBundle& S) {
  if (n < 1) throw ConfigError("tensor power must be >= 1");
  const Field& F = *S.cfg.F;
  const i64 q = F.q();
  const TSeries g = (TSeries::t_minus_theta(F) * S.omega).power(n);
  if (!validate_coeff_floor(g, [&](i64 m) { return Omega_pow_coeff_floor(q, -n, m); }))
    throw Error("period integrand violates the certified coefficient floor");
  const FieldElem sign = parity_sign(F, n);
  PeriodVector out;
  out.n = n;
  out.z.reserve(static_cast<std::size_t>(n));
  for (i64 i = 1; i <= n; ++i) {
    const TSeries d = g.hyperderive(n - i);
    const i64 tail = Omega_pow_theta_tail(q, -n, n - i, S.cfg.M);
    out.z.push_back(d.eval_at_theta(tail).scaled(sign));
  }
  return out;
}

PeriodVector period_coordinates_recentered(i64 n, const SpecialBundle& S) {
  if (n < 1) throw ConfigError("tensor power must be >= 1");
  const Field& F = *S.cfg.F;
  const i64 q = F.q();
  const TSeries omega_n = S.omega.power(n);
  const auto tail = [&](i64 j) { return Omega_pow_theta_tail(q, -n, j, S.cfg.M); };
  // c_{-n}, ..., c_{-1} of omega^n around theta; z_i = (-1)^n c_{-i}.
  const std::vector<LaurentU> c = recenter_at_theta(omega_n, n, n, tail);
  const FieldElem sign = parity_sign(F, n);
  PeriodVector out;
  out.n = n;
  out.z.reserve(static_cast<std::size_t>(n));
  for (i64 i = 1; i <= n; ++i) out.z.push_back(c[static_cast<std::size_t>(n - i)].scaled(sign));
  return out;
}

ToeplitzReport toeplitz_inverse_identity(i64 n, const SpecialBundle& S) {
  if (n < 1) throw ConfigError("tensor power must be >= 1");
  const Field& F = *S.cfg.F;
  const i64 q = F.q();
  const TSeries omega_big_n = S.Omega.power(n);
  std::vector<LaurentU> jets;
  jets.reserve(static_cast<std::size_t>(n));
  for (i64 m = 0; m < n; ++m) {
    const i64 tail = Omega_pow_theta_tail(q, n, m, S.cfg.M);
    jets.push_back(omega_big_n.hyperderive(m).eval_at_theta(tail));
  }
  BlockMat P(F, n);
  for (i64 i = 0; i < n; ++i)
    for (i64 j = i; j < n; ++j) P.at(i, j) = TSeries::constant(F, jets[static_cast<std::size_t>(j - i)]);
  const BlockMat Pinv = P.inverse(/*tprec_target=*/1);

  const PeriodVector pv = period_coordinates(n, S);
  const FieldElem sign = parity_sign(F, n);
  BlockMat Z(F, n);
  for (i64 i = 0; i < n; ++i)
    for (i64 j = i; j < n; ++j)
      Z.at(i, j) = TSeries::constant(F, pv.z[static_cast<std::size_t>(n - 1 - (j - i))].scaled(sign));

  const Residual r = mat_residual(Pinv, Z);
  return ToeplitzReport{r.pass, r.valuation, r.precision};
}

VanishingReport vanishing_pattern(i64 n, const SpecialBundle& S, i64 N_target) {
  if (n < 1) throw ConfigError("tensor power must be >= 1");
  const Field& F = *S.cfg.F;
  const i64 p = F.p();
  VanishingReport rep;
  rep.n = n;
  rep.ps = 1;
  i64 m = n;
  while (m % p == 0) {
    rep.ps *= p;
    m /= p;
  }
  rep.threshold = N_target - (F.q() - 1) * n;
  const PeriodVector pv = period_coordinates(n, S);
  rep.zero.resize(static_cast<std::size_t>(n));
  rep.pattern_pass = true;
  for (i64 i = 1; i <= n; ++i) {
    const bool z = pv.z[static_cast<std::size_t>(i - 1)].val_or_prec() >= rep.threshold;
    rep.zero[static_cast<std::size_t>(i - 1)] = z;
    if (z != (i % rep.ps != 0)) rep.pattern_pass = false;
  }
  rep.power_pass = true;
  if (rep.ps > 1) {
    const PeriodVector base = period_coordinates(n / rep.ps, S);
    for (i64 i = 1; i <= n / rep.ps; ++i) {
      const LaurentU lhs = pv.z[static_cast<std::size_t>(rep.ps * i - 1)];
      const LaurentU rhs = base.z[static_cast<std::size_t>(i - 1)].power(rep.ps);
      if (!eq_to_prec(lhs, rhs)) rep.power_pass = false;
    }
  }
  rep.pass = rep.pattern_pass && rep.power_pass;
  return rep;
}

PowerLemmaReport frobenius_power_lemma_check(const TSeries& f, i64 n, i64 k, i64 tprec_target,
                                             i64 u_prec) {
  const Field& F = *f.field();
  const i64 p = F.p();
  if (n < 1 || std::gcd(n, p) != 1) throw ConfigError("power must be prime to q");
  PowerLemmaReport rep;
  i64 ps = 1;
  rep.s = 0;
  while (ps <= k) {
    ps *= p;
    ++rep.s;
  }
  // a p^s + b n = 1 by the extended euclidean algorithm.
  {
    i64 r0 = ps, r1 = n, a0 = 1, a1 = 0, b0 = 0, b1 = 1;
    while (r1 != 0) {
      const i64 qq = r0 / r1;
      std::swap(r0 -= qq * r1, r1);
      std::swap(a0 -= qq * a1, a1);
      std::swap(b0 -= qq * b1, b1);
    }
    rep.a = a0;
    rep.b = b0;
  }

  const TSeries fp = f.power(ps, tprec_target, u_prec);
  const BlockMat rho_fp = rho(fp, k);
  rep.scalar_pass = true;
  for (i64 i = 0; i <= k; ++i)
    for (i64 j = 0; j <= k; ++j)
      if (i != j && rho_fp.at(i, j).known_nonzero()) rep.scalar_pass = false;

  const BlockMat lhs = rho(f, k);
  const BlockMat rho_fn_b = rho(f.power(n, tprec_target, u_prec), k).power(rep.b, tprec_target, u_prec);
  const TSeries scalar = fp.power(rep.a, tprec_target, u_prec);
  const Residual r = mat_residual(lhs, rho_fn_b.scaled(scalar));
  rep.identity_pass = r.pass;
  rep.residual_valuation = r.valuation;
  rep.precision = r.precision;
  return rep;
}

}  // namespace carlitz
