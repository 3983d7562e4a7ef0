#include "carlitz/motives.hpp"

#include <algorithm>
#include <cassert>

namespace carlitz {

MotiveDesc carlitz_motive(const Field& F, i64 n) {
  MotiveDesc M;
  M.rank = 1;
  M.theta = BlockMat(F, 1);
  M.theta.at(0, 0) = TSeries::t_minus_theta(F).power(n);
  M.divisibility_ell = n;
  return M;
}

DualMotiveDesc carlitz_dual(const Field& F, i64 n) {
  DualMotiveDesc M;
  M.rank = 1;
  M.theta_tilde = BlockMat(F, 1);
  M.theta_tilde.at(0, 0) = TSeries::t_minus_theta(F).power(n);
  return M;
}

TModuleDesc carlitz_tmodule(const Field& F) {
  TModuleDesc E;
  E.dim = 1;
  BlockMat A0(F, 1), A1(F, 1);
  A0.at(0, 0) = TSeries::constant(F, LaurentU::theta(F));
  A1.at(0, 0) = TSeries::constant(F, LaurentU::one(F));
  E.A = {A0, A1};
  return E;
}

MotiveDesc prolong_motive(const MotiveDesc& M, i64 k) {
  MotiveDesc out;
  out.rank = M.rank * (k + 1);
  out.theta = rho_mat(M.theta, k);
  if (M.divisibility_ell) out.divisibility_ell = *M.divisibility_ell * (k + 1);
  return out;
}

DualMotiveDesc prolong_dual(const DualMotiveDesc& M, i64 k) {
  DualMotiveDesc out;
  out.rank = M.rank * (k + 1);
  out.theta_tilde = rho_mat(M.theta_tilde, k);
  return out;
}

TModuleDesc prolong_tmodule(const TModuleDesc& E, i64 k) {
  const Field& F = *E.A.at(0).field();
  const i64 d = E.dim;
  TModuleDesc out;
  out.dim = d * (k + 1);
  out.A.reserve(E.A.size());
  for (std::size_t s = 0; s < E.A.size(); ++s) {
    BlockMat As(F, d * (k + 1));
    for (i64 b = 0; b <= k; ++b)
      for (i64 i = 0; i < d; ++i)
        for (i64 j = 0; j < d; ++j) As.at(b * d + i, b * d + j) = E.A[s].at(i, j);
    if (s == 0) {
      const TSeries minus_one = TSeries::constant(F, -LaurentU::one(F));
      for (i64 b = 0; b + 1 <= k; ++b)
        for (i64 i = 0; i < d; ++i) As.at((b + 1) * d + i, b * d + i) = minus_one;
    }
    out.A.push_back(std::move(As));
  }
  return out;
}

Trivialization prolong_trivialization(const Trivialization& T, i64 k) {
  return Trivialization{rho_mat(T.mat, k), T.flavor};
}

Residual verify_trivialization(const MotiveDesc& M, const Trivialization& T) {
  if (T.flavor != TrivFlavor::tau_side) throw ShapeMismatch("motive check needs a tau-side trivialization");
  if (M.theta.size() != T.mat.size()) throw ShapeMismatch("trivialization size differs from rank");
  const BlockMat lhs = M.theta * T.mat.twist(1);
  return mat_residual(lhs, T.mat);
}

Residual verify_trivialization(const DualMotiveDesc& M, const Trivialization& T) {
  if (T.flavor != TrivFlavor::sigma_side) throw ShapeMismatch("dual check needs a sigma-side trivialization");
  if (M.theta_tilde.size() != T.mat.size()) throw ShapeMismatch("trivialization size differs from rank");
  const BlockMat lhs = T.mat * M.theta_tilde;
  return mat_residual(lhs, T.mat.twist(-1));
}

bool tmodule_nilpotency_check(const TModuleDesc& E) {
  const Field& F = *E.A.at(0).field();
  const TSeries th = TSeries::constant(F, LaurentU::theta(F));
  const BlockMat N = E.A[0] - BlockMat::identity(F, E.dim).scaled(th);
  return !N.power(E.dim).known_nonzero();
}

InvTSeries invt_constant(const Field& F, LaurentU x) {
  (void)F;
  return InvTSeries{0, {std::move(x)}};
}

InvTSeries invt_monomial(const Field& F, LaurentU x, i64 inv_t_exp) {
  (void)F;
  return InvTSeries{inv_t_exp, {std::move(x)}};
}

namespace {

// t^{-u} d^n(t^u f): the term x_j t^{-(lead+j)} contributes
// binom(u - lead - j, n) x_j at 1/t-exponent lead + j + n.
InvTSeries conjugated_derivative(const Field& F, const InvTSeries& f, i64 u, i64 n) {
  InvTSeries out;
  out.lead = f.lead + n;
  out.c.reserve(f.c.size());
  for (std::size_t j = 0; j < f.c.size(); ++j) {
    const int b = binom_mod_p(u - f.lead - static_cast<i64>(j), n, F.p());
    out.c.push_back(f.c[j].scaled(F.from_int(b)));
  }
  return out;
}

std::optional<i64> invt_valuation(const InvTSeries& f) {
  for (std::size_t j = 0; j < f.c.size(); ++j)
    if (f.c[j].known_nonzero()) return f.lead + static_cast<i64>(j);
  return std::nullopt;
}

LaurentU invt_coeff_at(const Field& F, const InvTSeries& f, i64 s_exp) {
  const i64 idx = s_exp - f.lead;
  if (idx < 0 || idx >= static_cast<i64>(f.c.size())) return LaurentU::zero(F);
  return f.c[static_cast<std::size_t>(idx)];
}

// Division-free determinant over the coefficient field via subset dynamic
// programming; only nonvanishing is consumed.
LaurentU laurent_det(const Field& F, const std::vector<std::vector<LaurentU>>& m) {
  const std::size_t n = m.size();
  std::vector<LaurentU> dp(std::size_t{1} << n, LaurentU::zero(F));
  dp[0] = LaurentU::one(F);
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    LaurentU acc = LaurentU::zero(F);
    bool flip = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const LaurentU term = m[row][j] * dp[mask ^ (std::size_t{1} << j)];
      acc = flip ? acc - term : acc + term;
      flip = !flip;
    }
    dp[mask] = acc;
  }
  return dp.back();
}

}  // namespace

PurityReport purity_prolong_check(const Field& F, const std::vector<std::vector<InvTSeries>>& A,
                                  i64 u, i64 v, i64 k) {
  (void)v;  // weight denominator, recorded by the caller
  const i64 r = static_cast<i64>(A.size());
  for (const auto& row : A)
    if (static_cast<i64>(row.size()) != r) throw ShapeMismatch("lattice matrix must be square");

  PurityReport rep;
  rep.nonneg = true;

  // Blocks of the prolonged lattice equation, indexed by derivative order.
  std::vector<std::vector<std::vector<InvTSeries>>> blocks;
  blocks.reserve(static_cast<std::size_t>(k + 1));
  for (i64 n = 0; n <= k; ++n) {
    std::vector<std::vector<InvTSeries>> B(static_cast<std::size_t>(r));
    for (i64 i = 0; i < r; ++i)
      for (i64 j = 0; j < r; ++j)
        B[static_cast<std::size_t>(i)].push_back(
            conjugated_derivative(F, A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], u, n));
    for (const auto& row : B) {
      for (const auto& f : row) {
        if (auto val = invt_valuation(f)) {
          rep.min_valuation = rep.min_valuation ? std::min(*rep.min_valuation, *val) : *val;
          if (*val < 0) rep.nonneg = false;
        }
      }
    }
    blocks.push_back(std::move(B));
  }

  // Constant-term matrix of the assembled block upper-triangular Toeplitz
  // matrix; invertibility over power series in 1/t reduces to this.
  const i64 N = r * (k + 1);
  std::vector<std::vector<LaurentU>> c0(static_cast<std::size_t>(N),
                                        std::vector<LaurentU>(static_cast<std::size_t>(N), LaurentU::zero(F)));
  for (i64 bi = 0; bi <= k; ++bi)
    for (i64 bj = bi; bj <= k; ++bj)
      for (i64 i = 0; i < r; ++i)
        for (i64 j = 0; j < r; ++j)
          c0[static_cast<std::size_t>(bi * r + i)][static_cast<std::size_t>(bj * r + j)] =
              invt_coeff_at(F, blocks[static_cast<std::size_t>(bj - bi)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 0);

  rep.invertible = laurent_det(F, c0).known_nonzero();
  rep.pass = rep.nonneg && rep.invertible;
  return rep;
}

}  // namespace carlitz
