#include "carlitz/laurent.hpp"

#include <algorithm>
#include <cassert>

namespace carlitz {

namespace {

const Field* pick_field(const LaurentU& a, const LaurentU& b) {
  const Field* F = a.field() ? a.field() : b.field();
  assert(!(a.field() && b.field()) || a.field() == b.field());
  return F;
}

}  // namespace

LaurentU::LaurentU(const Field* F, i64 lead, std::vector<FieldElem> coeffs, i64 prec)
    : F_(F), lead_(lead), prec_(prec), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentU::normalize() {
  if (!F_) {
    lead_ = 0;
    prec_ = kExactPrec;
    coeffs_.clear();
    return;
  }
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip].v == 0) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
    lead_ += static_cast<i64>(skip);
  }
  if (prec_ >= kExactPrec) {
    prec_ = kExactPrec;
    while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
    if (coeffs_.empty()) lead_ = 0;
    return;
  }
  if (lead_ >= prec_ || coeffs_.empty()) {
    coeffs_.clear();
    lead_ = prec_;
    return;
  }
  // Stored window is exactly [lead, prec); positions a constructor did not
  // fill are known zeros of the finite part.
  coeffs_.resize(static_cast<std::size_t>(prec_ - lead_), FieldElem{0});
}

LaurentU LaurentU::zero(const Field& F) { return LaurentU(&F, 0, {}, kExactPrec); }

LaurentU LaurentU::zero_to(const Field& F, i64 prec) { return LaurentU(&F, prec, {}, prec); }

LaurentU LaurentU::monomial(const Field& F, FieldElem c, i64 exp, i64 prec) {
  if (F.is_zero(c)) return prec >= kExactPrec ? zero(F) : zero_to(F, prec);
  return LaurentU(&F, exp, {c}, prec);
}

LaurentU LaurentU::make(const Field& F, i64 lead, std::vector<FieldElem> coeffs, i64 prec) {
  return LaurentU(&F, lead, std::move(coeffs), prec);
}

LaurentU LaurentU::theta(const Field& F) {
  return monomial(F, F.neg(F.one()), -(F.q() - 1));
}

LaurentU LaurentU::lambda(const Field& F) { return monomial(F, F.one(), -1); }

LaurentU LaurentU::u(const Field& F) { return monomial(F, F.one(), 1); }

FieldElem LaurentU::coeff_at(i64 exp) const {
  if (exp < lead_ || exp - lead_ >= static_cast<i64>(coeffs_.size())) return FieldElem{0};
  return coeffs_[static_cast<std::size_t>(exp - lead_)];
}

std::optional<i64> LaurentU::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return lead_;
}

LaurentU LaurentU::truncated(i64 new_prec) const {
  if (!F_ || new_prec >= prec_) return *this;
  std::vector<FieldElem> c;
  if (new_prec > lead_) {
    const auto keep = static_cast<std::size_t>(std::min<i64>(new_prec - lead_, static_cast<i64>(coeffs_.size())));
    c.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep));
  }
  return LaurentU(F_, lead_, std::move(c), new_prec);
}

LaurentU LaurentU::shifted(i64 e) const {
  if (!F_) return *this;
  return LaurentU(F_, lead_ + e, coeffs_, sat_add(prec_, e));
}

LaurentU LaurentU::scaled(FieldElem c) const {
  if (!F_) return *this;
  if (F_->is_zero(c)) return zero(*F_);
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = F_->mul(coeffs_[i], c);
  return LaurentU(F_, lead_, std::move(out), prec_);
}

LaurentU operator+(const LaurentU& a, const LaurentU& b) {
  const Field* F = pick_field(a, b);
  if (!F) return LaurentU();
  const i64 prec = sat_min(a.prec_, b.prec_);
  i64 lead = kExactPrec;
  i64 end = -kExactPrec;
  for (const LaurentU* x : {&a, &b}) {
    if (x->known_nonzero()) {
      lead = std::min(lead, x->lead_);
      end = std::max(end, x->lead_ + static_cast<i64>(x->coeffs_.size()));
    }
  }
  if (prec < kExactPrec) end = prec;
  if (lead >= end) return prec >= kExactPrec ? LaurentU::zero(*F) : LaurentU::zero_to(*F, prec);
  std::vector<FieldElem> acc(static_cast<std::size_t>(end - lead), FieldElem{0});
  for (const LaurentU* x : {&a, &b}) {
    for (std::size_t i = 0; i < x->coeffs_.size(); ++i) {
      const i64 pos = x->lead_ + static_cast<i64>(i) - lead;
      if (pos < 0 || pos >= end - lead) continue;
      auto& slot = acc[static_cast<std::size_t>(pos)];
      slot = F->add(slot, x->coeffs_[i]);
    }
  }
  return LaurentU(F, lead, std::move(acc), prec);
}

LaurentU LaurentU::operator-() const {
  if (!F_) return *this;
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = F_->neg(coeffs_[i]);
  return LaurentU(F_, lead_, std::move(out), prec_);
}

LaurentU operator-(const LaurentU& a, const LaurentU& b) { return a + (-b); }

LaurentU LaurentU::dot(std::span<const LaurentU* const> xs, std::span<const LaurentU* const> ys) {
  assert(xs.size() == ys.size());
  const Field* F = nullptr;
  i64 prec = kExactPrec;
  i64 lead = kExactPrec;
  i64 end = -kExactPrec;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const LaurentU& x = *xs[k];
    const LaurentU& y = *ys[k];
    if (!F) F = pick_field(x, y);
    const i64 tp = sat_min(sat_add(x.prec_, y.val_or_prec()), sat_add(y.prec_, x.val_or_prec()));
    prec = sat_min(prec, tp);
    if (x.known_nonzero() && y.known_nonzero()) {
      lead = std::min(lead, x.lead_ + y.lead_);
      end = std::max(end, x.lead_ + static_cast<i64>(x.coeffs_.size()) + y.lead_ +
                              static_cast<i64>(y.coeffs_.size()) - 1);
    }
  }
  if (!F) return LaurentU();
  if (prec < kExactPrec) end = prec;
  if (lead >= end) return prec >= kExactPrec ? zero(*F) : zero_to(*F, prec);
  const i64 len = end - lead;
  std::vector<FieldElem> acc(static_cast<std::size_t>(len), FieldElem{0});
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const LaurentU& x = *xs[k];
    const LaurentU& y = *ys[k];
    if (!x.known_nonzero() || !y.known_nonzero()) continue;
    const i64 base = x.lead_ + y.lead_ - lead;
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      const FieldElem xi = x.coeffs_[i];
      if (xi.v == 0) continue;
      const i64 row = base + static_cast<i64>(i);
      if (row >= len) break;
      const std::size_t jmax = std::min(y.coeffs_.size(), static_cast<std::size_t>(len - row));
      for (std::size_t j = 0; j < jmax; ++j) {
        const FieldElem yj = y.coeffs_[j];
        if (yj.v == 0) continue;
        auto& slot = acc[static_cast<std::size_t>(row + static_cast<i64>(j))];
        slot = F->add(slot, F->mul(xi, yj));
      }
    }
  }
  return LaurentU(F, lead, std::move(acc), prec);
}

LaurentU operator*(const LaurentU& a, const LaurentU& b) {
  const LaurentU* xs[1] = {&a};
  const LaurentU* ys[1] = {&b};
  return LaurentU::dot(xs, ys);
}

LaurentU LaurentU::inverse(i64 target) const {
  if (!known_nonzero()) throw InversionOfZero("no nonzero coefficient known");
  const i64 v = lead_;
  const FieldElem c0 = coeffs_.front();
  if (exact() && coeffs_.size() == 1) {
    const LaurentU out = monomial(*F_, F_->inv(c0), -v);
    return target == kNoBound ? out : out.truncated(target);
  }
  i64 out_prec;
  if (exact()) {
    if (target == kNoBound)
      throw Error("inverse of an exact non-monomial needs a target precision");
    out_prec = target;
  } else {
    out_prec = prec_ - 2 * v;
    if (target != kNoBound) out_prec = std::min(out_prec, target);
  }
  const i64 len = out_prec + v;  // window of the result is [-v, out_prec)
  if (len < 1) throw PrecisionLoss("inverse known to no digits at this precision");
  std::vector<FieldElem> b(static_cast<std::size_t>(len), FieldElem{0});
  const FieldElem c0inv = F_->inv(c0);
  b[0] = c0inv;
  for (i64 m = 1; m < len; ++m) {
    FieldElem s{0};
    const i64 lmax = std::min<i64>(m, static_cast<i64>(coeffs_.size()) - 1);
    for (i64 l = 1; l <= lmax; ++l) {
      const FieldElem al = coeffs_[static_cast<std::size_t>(l)];
      if (al.v == 0) continue;
      const FieldElem bl = b[static_cast<std::size_t>(m - l)];
      if (bl.v == 0) continue;
      s = F_->add(s, F_->mul(al, bl));
    }
    b[static_cast<std::size_t>(m)] = F_->neg(F_->mul(c0inv, s));
  }
  return LaurentU(F_, -v, std::move(b), out_prec);
}

LaurentU LaurentU::power(i64 n, i64 target) const {
  if (!F_) return *this;
  if (n == 0) return one(*F_);
  if (n < 0) return inverse(target).power(-n);
  LaurentU base = *this;
  LaurentU acc = one(*F_);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

LaurentU LaurentU::coeff_twist(i64 k) const {
  if (!F_ || k == 0) return *this;
  const i64 q = F_->q();
  if (k > 0) {
    i64 Qk = 1;
    for (i64 i = 0; i < k; ++i) Qk *= q;
    const i64 new_prec = sat_scale_pow(prec_, q, k);
    if (!known_nonzero())
      return exact() ? zero(*F_) : zero_to(*F_, new_prec);
    std::vector<FieldElem> out(static_cast<std::size_t>((static_cast<i64>(coeffs_.size()) - 1) * Qk + 1),
                               FieldElem{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].v == 0) continue;
      out[static_cast<std::size_t>(static_cast<i64>(i) * Qk)] = F_->frobenius(coeffs_[i], k);
    }
    return LaurentU(F_, lead_ * Qk, std::move(out), new_prec);
  }
  i64 Qk = 1;
  for (i64 i = 0; i < -k; ++i) Qk *= q;
  const i64 new_prec = exact() ? kExactPrec : ceil_div(prec_, Qk);
  if (!known_nonzero()) return exact() ? zero(*F_) : zero_to(*F_, new_prec);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].v != 0 && (lead_ + static_cast<i64>(i)) % Qk != 0)
      throw PrecisionLoss("element is not a q-th power at this precision");
  }
  const i64 nl = ceil_div(lead_, Qk);
  std::vector<FieldElem> out;
  const i64 nend = exact() ? floor_div(lead_ + static_cast<i64>(coeffs_.size()) - 1, Qk) + 1 : new_prec;
  if (nend > nl) {
    out.assign(static_cast<std::size_t>(nend - nl), FieldElem{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const i64 exp = lead_ + static_cast<i64>(i);
      if (coeffs_[i].v == 0 || exp % Qk != 0) continue;
      const i64 pos = exp / Qk - nl;
      if (pos >= 0 && pos < nend - nl)
        out[static_cast<std::size_t>(pos)] = F_->frobenius(coeffs_[i], k);
    }
  }
  return LaurentU(F_, nl, std::move(out), new_prec);
}

bool identical(const LaurentU& a, const LaurentU& b) {
  return a.F_ == b.F_ && a.lead_ == b.lead_ && a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_;
}

std::optional<i64> residual_valuation(const LaurentU& a, const LaurentU& b) {
  return (a - b).valuation();
}

i64 common_prec(const LaurentU& a, const LaurentU& b) { return sat_min(a.prec(), b.prec()); }

bool eq_to_prec(const LaurentU& a, const LaurentU& b) { return !(a - b).known_nonzero(); }

}  // namespace carlitz
