#pragma once

#include <optional>
#include <span>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

// Truncated Laurent series in u = 1/lambda over F_{q^d}, where lambda is a
// (q-1)-th root of -theta, i.e. theta = -u^{-(q-1)}. Absolute-precision model:
// coefficients at u-exponents >= prec() are unknown; prec() == kExactPrec
// marks an exactly known element (all omitted coefficients are true zeros).
//
// The absolute value |x| = q^{-v(x)/(q-1)} (v = u-adic valuation) restricts to
// |theta| = q on the represented subfield.
//
// Normal form: coeffs().front() != 0 unless nothing nonzero is known; for
// finite precision the stored window is exactly [lead, prec).
class LaurentU {
 public:
  LaurentU() = default;  // exact zero with no field attached

  static LaurentU zero(const Field& F);
  static LaurentU zero_to(const Field& F, i64 prec);  // 0 + O(u^prec)
  static LaurentU monomial(const Field& F, FieldElem c, i64 exp, i64 prec = kExactPrec);
  static LaurentU one(const Field& F) { return monomial(F, F.one(), 0); }
  static LaurentU make(const Field& F, i64 lead, std::vector<FieldElem> coeffs, i64 prec);

  static LaurentU theta(const Field& F);   // -u^{-(q-1)}, exact
  static LaurentU lambda(const Field& F);  // u^{-1}, exact
  static LaurentU u(const Field& F);       // u, exact

  const Field* field() const { return F_; }
  i64 lead() const { return lead_; }
  i64 prec() const { return prec_; }
  bool exact() const { return prec_ == kExactPrec; }
  std::span<const FieldElem> coeffs() const { return coeffs_; }
  FieldElem coeff_at(i64 exp) const;  // stored coefficient, zero outside the window

  bool known_nonzero() const { return !coeffs_.empty(); }
  // u-exponent of the first known nonzero coefficient; nullopt is the
  // infinity marker (all known coefficients vanish).
  std::optional<i64> valuation() const;
  // valuation, with the precision standing in for unknown-zero elements.
  i64 val_or_prec() const { return coeffs_.empty() ? prec_ : lead_; }

  LaurentU truncated(i64 new_prec) const;
  LaurentU shifted(i64 e) const;  // * u^e
  LaurentU scaled(FieldElem c) const;

  friend LaurentU operator+(const LaurentU& a, const LaurentU& b);
  friend LaurentU operator-(const LaurentU& a, const LaurentU& b);
  friend LaurentU operator*(const LaurentU& a, const LaurentU& b);
  LaurentU operator-() const;

  // Multiplicative inverse. Precision of the result is prec - 2*v (standard
  // non-archimedean propagation), capped by target if supplied. Exact inputs
  // that are not monomials require an explicit target.
  LaurentU inverse(i64 target = kNoBound) const;
  LaurentU power(i64 n, i64 target = kNoBound) const;

  // x -> x^{q^k} on the represented field: u-exponents scale by q^k and
  // stored coefficients move by Frobenius^k. For k < 0 throws PrecisionLoss
  // if some known nonzero coefficient sits on an exponent not divisible by
  // q^{|k|} (the element is not a q^{|k|}-th power at this precision).
  LaurentU coeff_twist(i64 k) const;

  // Fused sum of products xs[k]*ys[k] with a single normalization pass; the
  // workhorse behind series and matrix multiplication.
  static LaurentU dot(std::span<const LaurentU* const> xs, std::span<const LaurentU* const> ys);

  // Representation equality (same window, same digits, same precision).
  friend bool identical(const LaurentU& a, const LaurentU& b);

 private:
  LaurentU(const Field* F, i64 lead, std::vector<FieldElem> coeffs, i64 prec);
  void normalize();

  const Field* F_ = nullptr;
  i64 lead_ = 0;
  i64 prec_ = kExactPrec;
  std::vector<FieldElem> coeffs_;
};

// Valuation of a - b: nullopt means the two agree at every known digit.
std::optional<i64> residual_valuation(const LaurentU& a, const LaurentU& b);
// Precision at which a - b is tracked.
i64 common_prec(const LaurentU& a, const LaurentU& b);
// True iff a - b has no known nonzero digit.
bool eq_to_prec(const LaurentU& a, const LaurentU& b);

}  // namespace carlitz
