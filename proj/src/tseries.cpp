#include "carlitz/tseries.hpp"

#include <algorithm>
#include <cassert>

namespace carlitz {

namespace {

const Field* pick_field(const TSeries& a, const TSeries& b) {
  const Field* F = a.field() ? a.field() : b.field();
  assert(!(a.field() && b.field()) || a.field() == b.field());
  return F;
}

bool exactly_zero(const LaurentU& c) { return c.exact() && !c.known_nonzero(); }

}  // namespace

TSeries::TSeries(const Field* F, Kind kind, i64 tprec, std::vector<LaurentU> coeffs)
    : F_(F), kind_(kind), tprec_(tprec), coeffs_(std::move(coeffs)) {
  normalize();
}

void TSeries::normalize() {
  if (!F_) {
    kind_ = Kind::polynomial;
    tprec_ = 0;
    coeffs_.clear();
    return;
  }
  if (kind_ == Kind::polynomial) {
    while (!coeffs_.empty() && exactly_zero(coeffs_.back())) coeffs_.pop_back();
    tprec_ = 0;
    return;
  }
  if (tprec_ < 0) tprec_ = 0;
  if (tprec_ >= kExactPrec) {  // a series that is exact in t is a polynomial
    kind_ = Kind::polynomial;
    tprec_ = 0;
    normalize();
    return;
  }
  // Stored window is exactly [0, tprec); missing entries are known zeros.
  coeffs_.resize(static_cast<std::size_t>(tprec_), LaurentU::zero(*F_));
}

TSeries TSeries::zero(const Field& F) { return TSeries(&F, Kind::polynomial, 0, {}); }

TSeries TSeries::zero_series(const Field& F, i64 tprec) {
  return TSeries(&F, Kind::series, std::max<i64>(tprec, 0), {});
}

TSeries TSeries::constant(const Field& F, LaurentU c) {
  return TSeries(&F, Kind::polynomial, 0, {std::move(c)});
}

TSeries TSeries::monomial(const Field& F, LaurentU c, i64 k) {
  std::vector<LaurentU> v(static_cast<std::size_t>(k + 1), LaurentU::zero(F));
  v[static_cast<std::size_t>(k)] = std::move(c);
  return TSeries(&F, Kind::polynomial, 0, std::move(v));
}

TSeries TSeries::t_minus_theta(const Field& F) {
  return TSeries(&F, Kind::polynomial, 0, {-LaurentU::theta(F), LaurentU::one(F)});
}

TSeries TSeries::from_coeffs(const Field& F, std::vector<LaurentU> coeffs, Kind kind, i64 tprec) {
  return TSeries(&F, kind, tprec, std::move(coeffs));
}

const LaurentU& TSeries::coeff(i64 m) const {
  static const LaurentU kZero{};
  if (m < 0 || m >= size()) {
    assert(kind_ == Kind::polynomial || !F_);
    return kZero;
  }
  return coeffs_[static_cast<std::size_t>(m)];
}

i64 TSeries::t_valuation_floor() const {
  for (i64 m = 0; m < size(); ++m)
    if (!exactly_zero(coeffs_[static_cast<std::size_t>(m)])) return m;
  return kind_ == Kind::polynomial ? kExactPrec : tprec_;
}

i64 TSeries::min_coeff_prec() const {
  i64 p = kExactPrec;
  for (const auto& c : coeffs_) p = sat_min(p, c.prec());
  return p;
}

std::optional<i64> TSeries::min_uvaluation() const {
  std::optional<i64> out;
  for (const auto& c : coeffs_) {
    if (auto v = c.valuation()) out = out ? std::min(*out, *v) : *v;
  }
  return out;
}

bool TSeries::known_nonzero() const {
  for (const auto& c : coeffs_)
    if (c.known_nonzero()) return true;
  return false;
}

TSeries TSeries::truncated_t(i64 M) const {
  if (!F_) return *this;
  std::vector<LaurentU> out(coeffs_.begin(),
                            coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min<i64>(M, size())));
  const i64 np = kind_ == Kind::polynomial ? M : std::min(M, tprec_);
  return TSeries(F_, Kind::series, np, std::move(out));
}

TSeries TSeries::truncated_u(i64 uprec) const {
  if (!F_) return *this;
  std::vector<LaurentU> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.truncated(uprec));
  return TSeries(F_, kind_, tprec_, std::move(out));
}

TSeries TSeries::scaled(const LaurentU& c) const {
  if (!F_) return *this;
  const TSeries k = constant(*F_, c);
  return mul_serial(*this, k);
}

TSeries operator+(const TSeries& a, const TSeries& b) {
  const Field* F = pick_field(a, b);
  if (!F) return TSeries();
  const bool poly = a.is_polynomial() && b.is_polynomial();
  const i64 tprec = sat_min(a.tprec(), b.tprec());
  const i64 n = poly ? std::max(a.size(), b.size()) : tprec;
  std::vector<LaurentU> out;
  out.reserve(static_cast<std::size_t>(n));
  for (i64 m = 0; m < n; ++m) out.push_back(a.coeff(m) + b.coeff(m));
  return TSeries::from_coeffs(*F, std::move(out), poly ? Kind::polynomial : Kind::series, tprec);
}

TSeries TSeries::operator-() const {
  if (!F_) return *this;
  std::vector<LaurentU> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return TSeries(F_, kind_, tprec_, std::move(out));
}

TSeries operator-(const TSeries& a, const TSeries& b) { return a + (-b); }

TSeries TSeries::dot(std::span<const TSeries* const> xs, std::span<const TSeries* const> ys,
                     bool parallel) {
  assert(xs.size() == ys.size());
  const Field* F = nullptr;
  bool poly = true;
  i64 tprec = kExactPrec;
  i64 deg = -1;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const TSeries& x = *xs[k];
    const TSeries& y = *ys[k];
    if (!F) F = pick_field(x, y);
    poly = poly && x.is_polynomial() && y.is_polynomial();
    const i64 rule = sat_min(sat_add(x.tprec(), y.t_valuation_floor()),
                             sat_add(y.tprec(), x.t_valuation_floor()));
    tprec = sat_min(tprec, rule);
    if (x.size() > 0 && y.size() > 0) deg = std::max(deg, x.degree() + y.degree());
  }
  if (!F) return TSeries();
  const i64 n = poly ? deg + 1 : std::max<i64>(tprec, 0);
  std::vector<LaurentU> out(static_cast<std::size_t>(std::max<i64>(n, 0)));

  const auto compute = [&](i64 m) {
    std::vector<const LaurentU*> ps, qs;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const TSeries& x = *xs[k];
      const TSeries& y = *ys[k];
      const i64 ilo = std::max<i64>(0, m - (y.size() - 1));
      const i64 ihi = std::min<i64>(x.size() - 1, m);
      for (i64 i = ilo; i <= ihi; ++i) {
        const LaurentU& xc = x.coeff(i);
        if (exactly_zero(xc)) continue;
        ps.push_back(&xc);
        qs.push_back(&y.coeff(m - i));
      }
    }
    out[static_cast<std::size_t>(m)] = LaurentU::dot(ps, qs);
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (i64 m = 0; m < n; ++m) compute(m);
  } else {
    for (i64 m = 0; m < n; ++m) compute(m);
  }
  // Coefficients with no contributing pairs are exact zeros of the product;
  // give them the field so normalization keeps the window dense.
  for (auto& c : out)
    if (!c.field()) c = LaurentU::zero(*F);
  return TSeries(F, poly ? Kind::polynomial : Kind::series, poly ? 0 : tprec, std::move(out));
}

TSeries TSeries::mul(const TSeries& a, const TSeries& b) {
  const TSeries* xs[1] = {&a};
  const TSeries* ys[1] = {&b};
  return dot(xs, ys, /*parallel=*/true);
}

TSeries TSeries::mul_serial(const TSeries& a, const TSeries& b) {
  const TSeries* xs[1] = {&a};
  const TSeries* ys[1] = {&b};
  return dot(xs, ys, /*parallel=*/false);
}

TSeries TSeries::inverse(i64 tprec_target, i64 u_prec) const {
  if (!F_) throw InversionOfZero("inverse of the zero series");
  i64 M;
  if (kind_ == Kind::series) {
    M = tprec_;
    if (tprec_target != kNoBound) M = std::min(M, tprec_target);
  } else {
    if (tprec_target == kNoBound)
      throw Error("polynomial inverse needs a t-truncation target");
    M = tprec_target;
  }
  if (M < 1) throw PrecisionLoss("inverse known to no t-digits");
  const LaurentU& a0 = coeff(0);
  if (!a0.known_nonzero()) throw InversionOfZero("constant term has no known nonzero digit");
  const LaurentU b0 = a0.inverse(u_prec);
  std::vector<LaurentU> b;
  b.reserve(static_cast<std::size_t>(M));
  b.push_back(b0);
  std::vector<const LaurentU*> ps, qs;
  for (i64 m = 1; m < M; ++m) {
    ps.clear();
    qs.clear();
    const i64 imax = std::min<i64>(m, size() - 1);
    for (i64 i = 1; i <= imax; ++i) {
      const LaurentU& ai = coeff(i);
      if (exactly_zero(ai)) continue;
      ps.push_back(&ai);
      qs.push_back(&b[static_cast<std::size_t>(m - i)]);
    }
    b.push_back(-(b0 * LaurentU::dot(ps, qs)));
  }
  return TSeries(F_, Kind::series, M, std::move(b));
}

TSeries TSeries::power(i64 n, i64 tprec_target, i64 u_prec) const {
  if (!F_) return *this;
  if (n == 0) return constant(*F_, LaurentU::one(*F_));
  if (n < 0) return inverse(tprec_target, u_prec).power(-n);
  TSeries base = *this;
  TSeries acc = constant(*F_, LaurentU::one(*F_));
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

TSeries TSeries::hyperderive(i64 n) const {
  if (!F_ || n == 0) return *this;
  if (kind_ == Kind::series && n >= tprec_)
    throw Error("hyperderivative order exceeds t-precision");
  const i64 out_n = kind_ == Kind::polynomial ? std::max<i64>(size() - n, 0) : tprec_ - n;
  std::vector<LaurentU> out;
  out.reserve(static_cast<std::size_t>(out_n));
  for (i64 m = 0; m < out_n; ++m) {
    const int bin = binom_mod_p(m + n, n, F_->p());
    out.push_back(coeff(m + n).scaled(F_->from_int(bin)));
  }
  return TSeries(F_, kind_, kind_ == Kind::polynomial ? 0 : tprec_ - n, std::move(out));
}

TSeries TSeries::twist(i64 k) const {
  if (!F_ || k == 0) return *this;
  std::vector<LaurentU> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.coeff_twist(k));
  return TSeries(F_, kind_, tprec_, std::move(out));
}

LaurentU TSeries::eval_at_theta(i64 tail_bound) const {
  if (!F_) return LaurentU();
  const LaurentU th = LaurentU::theta(*F_);
  if (kind_ == Kind::series) {
    if (tail_bound == kNoBound)
      throw Error("series evaluation at theta needs a certified tail bound");
    // Divergence guard: the last q known increments must strictly gain
    // valuation.
    const i64 qm1 = F_->q() - 1;
    std::vector<i64> inc;
    for (i64 m = 0; m < size(); ++m) {
      const auto& c = coeffs_[static_cast<std::size_t>(m)];
      if (c.known_nonzero()) inc.push_back(*c.valuation() - m * qm1);
    }
    const std::size_t look = std::min<std::size_t>(inc.size(), static_cast<std::size_t>(F_->q()));
    for (std::size_t i = inc.size() - look; i + 1 < inc.size(); ++i)
      if (inc[i + 1] <= inc[i])
        throw DivergentEvaluation("partial-sum increments do not gain valuation");
  }
  LaurentU acc = LaurentU::zero(*F_);
  for (i64 m = size() - 1; m >= 0; --m) acc = acc * th + coeffs_[static_cast<std::size_t>(m)];
  if (kind_ == Kind::series) acc = acc.truncated(sat_min(acc.prec(), tail_bound));
  return acc;
}

LaurentU TSeries::eval_at_zeta(FieldElem zeta, i64 tail_bound) const {
  if (!F_) return LaurentU();
  if (kind_ == Kind::series && tail_bound == kNoBound)
    throw Error("series evaluation at zeta needs a certified tail bound");
  LaurentU acc = LaurentU::zero(*F_);
  for (i64 m = size() - 1; m >= 0; --m)
    acc = acc.scaled(zeta) + coeffs_[static_cast<std::size_t>(m)];
  if (kind_ == Kind::series) acc = acc.truncated(sat_min(acc.prec(), tail_bound));
  return acc;
}

std::vector<LaurentU> recenter_at_theta(const TSeries& f, i64 pole_order, i64 terms,
                                        const std::function<i64(i64)>& tail_bound) {
  const Field& F = *f.field();
  const TSeries g = f * TSeries::t_minus_theta(F).power(pole_order);
  std::vector<LaurentU> out;
  out.reserve(static_cast<std::size_t>(terms));
  for (i64 j = 0; j < terms; ++j) {
    const TSeries dj = g.hyperderive(j);
    const i64 tb = dj.is_polynomial() ? kNoBound
                   : (tail_bound ? tail_bound(j) : observed_theta_tail_bound(dj));
    out.push_back(dj.eval_at_theta(tb));
  }
  return out;
}

namespace {

// Effective valuations and extrapolated bound shared by the observed-tail
// helpers; weight = q-1 for theta evaluation, 0 for zeta evaluation.
i64 observed_tail(const TSeries& f, i64 weight) {
  const i64 n = f.size();
  if (n < 4) throw DivergentEvaluation("too few stored coefficients for a tail bound");
  std::vector<i64> eff;
  eff.reserve(static_cast<std::size_t>(n));
  for (i64 m = 0; m < n; ++m) eff.push_back(f.coeff(m).val_or_prec() - m * weight);
  i64 slope = kExactPrec;
  for (i64 m = n / 2; m + 1 < n; ++m) slope = std::min(slope, eff[m + 1] - eff[m]);
  if (slope < 1) throw DivergentEvaluation("stored coefficient valuations do not grow");
  return eff[static_cast<std::size_t>(n - 1)] + slope;
}

}  // namespace

i64 observed_theta_tail_bound(const TSeries& f) { return observed_tail(f, f.field()->q() - 1); }

i64 observed_zeta_tail_bound(const TSeries& f) { return observed_tail(f, 0); }

Residual tseries_residual(const TSeries& a, const TSeries& b) {
  const TSeries d = a - b;
  Residual r;
  r.pass = !d.known_nonzero();
  r.valuation = d.min_uvaluation();
  r.precision = d.min_coeff_prec();
  return r;
}

}  // namespace carlitz
