#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "carlitz/laurent.hpp"

namespace carlitz {

enum class Kind { polynomial, series };

// Polynomial or truncated power series in t with LaurentU coefficients.
// kind == polynomial means every omitted coefficient is exactly zero (the
// stored ones may still carry finite u-precision); kind == series means
// coefficients at t-exponents >= tprec() are unknown. Each coefficient tracks
// its own u-precision.
class TSeries {
 public:
  TSeries() = default;  // zero polynomial with no field attached

  static TSeries zero(const Field& F);
  static TSeries zero_series(const Field& F, i64 tprec);
  static TSeries constant(const Field& F, LaurentU c);
  static TSeries monomial(const Field& F, LaurentU c, i64 k);
  static TSeries t_minus_theta(const Field& F);
  static TSeries from_coeffs(const Field& F, std::vector<LaurentU> coeffs, Kind kind, i64 tprec);

  const Field* field() const { return F_; }
  Kind kind() const { return kind_; }
  bool is_polynomial() const { return kind_ == Kind::polynomial; }
  i64 tprec() const { return kind_ == Kind::polynomial ? kExactPrec : tprec_; }
  i64 size() const { return static_cast<i64>(coeffs_.size()); }
  i64 degree() const { return static_cast<i64>(coeffs_.size()) - 1; }
  const LaurentU& coeff(i64 m) const;

  // First t-exponent whose coefficient is not exactly zero (certified lower
  // bound for the t-adic valuation); kExactPrec when the series is exactly 0.
  i64 t_valuation_floor() const;
  i64 min_coeff_prec() const;
  std::optional<i64> min_uvaluation() const;
  bool known_nonzero() const;

  TSeries truncated_t(i64 M) const;
  TSeries truncated_u(i64 uprec) const;
  TSeries scaled(const LaurentU& c) const;

  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator-(const TSeries& a, const TSeries& b);
  TSeries operator-() const;
  friend TSeries operator*(const TSeries& a, const TSeries& b) { return mul(a, b); }

  // Product with OpenMP over output coefficients; mul_serial is the reference
  // implementation kept for testing and benchmarking.
  static TSeries mul(const TSeries& a, const TSeries& b);
  static TSeries mul_serial(const TSeries& a, const TSeries& b);
  // Fused sum of products xs[k]*ys[k].
  static TSeries dot(std::span<const TSeries* const> xs, std::span<const TSeries* const> ys,
                     bool parallel);

  // Series inverse; requires an invertible constant term. Polynomials need an
  // explicit t-truncation target, and an exact non-monomial constant term
  // needs u_prec to cap the coefficient precision.
  TSeries inverse(i64 tprec_target = kNoBound, i64 u_prec = kNoBound) const;
  TSeries power(i64 n, i64 tprec_target = kNoBound, i64 u_prec = kNoBound) const;

  // n-th hyperderivative: t^i |-> C(i,n) t^{i-n} with C(i,n) taken mod p.
  TSeries hyperderive(i64 n) const;
  // Coefficient-wise twist x -> x^{q^k}; t-exponents are untouched.
  TSeries twist(i64 k) const;

  // Evaluation at t = theta. Series need the caller's certified u-valuation
  // bound for the omitted tail; polynomials evaluate exactly. Throws
  // DivergentEvaluation when the last q known partial-sum increments fail to
  // gain valuation.
  LaurentU eval_at_theta(i64 tail_bound = kNoBound) const;
  // Evaluation at a constant zeta (|zeta| <= 1).
  LaurentU eval_at_zeta(FieldElem zeta, i64 tail_bound = kNoBound) const;

 private:
  TSeries(const Field* F, Kind kind, i64 tprec, std::vector<LaurentU> coeffs);
  void normalize();

  const Field* F_ = nullptr;
  Kind kind_ = Kind::polynomial;
  i64 tprec_ = 0;  // only meaningful for series kind
  std::vector<LaurentU> coeffs_;
};

// Laurent coefficients c_{-pole_order}, ..., c_{terms-pole_order-1} of f
// around t = theta, computed by clearing the pole and Taylor-recentering with
// hyperderivatives (the Taylor coefficients at theta are the evaluated
// hyperderivatives). tail_bound(j) certifies the tail of the j-th derivative
// evaluation; when absent an observed-growth bound is used.
std::vector<LaurentU> recenter_at_theta(const TSeries& f, i64 pole_order, i64 terms,
                                        const std::function<i64(i64)>& tail_bound = {});

// Tail bounds extrapolated from the stored coefficient valuations (minimum
// growth rate over the upper half of the stored range, recorded per run).
i64 observed_theta_tail_bound(const TSeries& f);
i64 observed_zeta_tail_bound(const TSeries& f);

struct Residual {
  bool pass = false;                  // no known nonzero digit in the difference
  std::optional<i64> valuation;       // nullopt = indistinguishable from zero
  i64 precision = 0;                  // tracked precision of the comparison
};
Residual tseries_residual(const TSeries& a, const TSeries& b);

}  // namespace carlitz
