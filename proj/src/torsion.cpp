#include "carlitz/torsion.hpp"

namespace carlitz {

namespace {

i64 q_to_the(const Field& F, i64 d) {
  i64 out = 1;
  for (i64 i = 0; i < d; ++i) out *= F.q();
  return out;
}

TorsionReport finish(FieldElem zeta, i64 d, i64 n, const LaurentU& residual) {
  TorsionReport rep;
  rep.zeta = zeta;
  rep.zeta_degree = d;
  rep.n = n;
  rep.pass = !residual.known_nonzero();
  rep.residual_valuation = residual.valuation();
  rep.precision = residual.prec();
  return rep;
}

}  // namespace

TorsionReport omega_at_zeta_relation(FieldElem zeta, const SpecialBundle& S) {
  const Field& F = *S.cfg.F;
  if (F.is_zero(zeta)) throw ConfigError("zeta must be nonzero");
  const i64 d = F.degree_over_base(zeta);
  const i64 qd = q_to_the(F, d);
  const LaurentU w = S.omega.eval_at_zeta(zeta, omega_zeta_tail(F.q(), S.cfg.M));
  const LaurentU b = beta_poly(F, d).eval_at_zeta(zeta);
  return finish(zeta, d, 0, w.power(qd - 1) - b);
}

TorsionReport hyper_omega_at_zeta_relation(FieldElem zeta, i64 n, const SpecialBundle& S) {
  const Field& F = *S.cfg.F;
  if (F.is_zero(zeta)) throw ConfigError("zeta must be nonzero");
  if (n < 1) throw ConfigError("hyperderivative order must be >= 1");
  const i64 d = F.degree_over_base(zeta);
  const i64 qd = q_to_the(F, d);
  const LaurentU w = S.omega.hyperderive(n).eval_at_zeta(zeta, omega_zeta_tail(F.q(), S.cfg.M));
  const LaurentU b = beta_poly(F, d).eval_at_zeta(zeta);
  const LaurentU xin = xi_fn(n, d, S).eval_at_zeta(zeta, xi_zeta_tail(F.q(), d, S.cfg.M));
  return finish(zeta, d, n, w.power(qd) - b * w - xin);
}

std::vector<TorsionReport> torsion_grid(i64 nmax, const SpecialBundle& S, std::size_t zeta_cap) {
  const Field& F = *S.cfg.F;
  const std::vector<FieldElem> zetas = F.elements_of_degree(F.d(), zeta_cap);
  const i64 per = nmax + 1;
  std::vector<TorsionReport> out(zetas.size() * static_cast<std::size_t>(per));
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (i64 zi = 0; zi < static_cast<i64>(zetas.size()); ++zi) {
    for (i64 n = 0; n <= nmax; ++n) {
      auto& slot = out[static_cast<std::size_t>(zi * per + n)];
      slot = n == 0 ? omega_at_zeta_relation(zetas[static_cast<std::size_t>(zi)], S)
                    : hyper_omega_at_zeta_relation(zetas[static_cast<std::size_t>(zi)], n, S);
    }
  }
  return out;
}

}  // namespace carlitz
