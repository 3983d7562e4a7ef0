#include "carlitz/blockmat.hpp"

#include <algorithm>
#include <cassert>

namespace carlitz {

namespace {

bool is_unit_entry(const TSeries& x) {
  return x.size() > 0 && x.t_valuation_floor() == 0 && x.coeff(0).known_nonzero();
}

bool exactly_zero_entry(const TSeries& x) {
  return x.is_polynomial() && !x.known_nonzero() && x.min_coeff_prec() >= kExactPrec;
}

}  // namespace

BlockMat::BlockMat(const Field& F, i64 n)
    : F_(&F), n_(n), e_(static_cast<std::size_t>(n * n), TSeries::zero(F)) {}

BlockMat BlockMat::identity(const Field& F, i64 n) {
  BlockMat I(F, n);
  for (i64 i = 0; i < n; ++i) I.at(i, i) = TSeries::constant(F, LaurentU::one(F));
  return I;
}

BlockMat operator+(const BlockMat& a, const BlockMat& b) {
  if (a.size() != b.size()) throw ShapeMismatch("matrix sizes differ");
  BlockMat c(*a.field(), a.size());
  for (i64 i = 0; i < a.size(); ++i)
    for (i64 j = 0; j < a.size(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

BlockMat operator-(const BlockMat& a, const BlockMat& b) {
  if (a.size() != b.size()) throw ShapeMismatch("matrix sizes differ");
  BlockMat c(*a.field(), a.size());
  for (i64 i = 0; i < a.size(); ++i)
    for (i64 j = 0; j < a.size(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

namespace {

BlockMat mul_impl(const BlockMat& a, const BlockMat& b, bool parallel) {
  if (a.size() != b.size()) throw ShapeMismatch("matrix sizes differ");
  const i64 n = a.size();
  BlockMat c(*a.field(), n);
  const auto entry = [&](i64 i, i64 j) {
    std::vector<const TSeries*> xs(static_cast<std::size_t>(n));
    std::vector<const TSeries*> ys(static_cast<std::size_t>(n));
    for (i64 k = 0; k < n; ++k) {
      xs[static_cast<std::size_t>(k)] = &a.at(i, k);
      ys[static_cast<std::size_t>(k)] = &b.at(k, j);
    }
    c.at(i, j) = TSeries::dot(xs, ys, /*parallel=*/false);
  };
  if (parallel) {
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (i64 i = 0; i < n; ++i)
      for (i64 j = 0; j < n; ++j) entry(i, j);
  } else {
    for (i64 i = 0; i < n; ++i)
      for (i64 j = 0; j < n; ++j) entry(i, j);
  }
  return c;
}

}  // namespace

BlockMat BlockMat::mul(const BlockMat& a, const BlockMat& b) { return mul_impl(a, b, true); }

BlockMat BlockMat::mul_serial(const BlockMat& a, const BlockMat& b) {
  return mul_impl(a, b, false);
}

BlockMat BlockMat::scaled(const TSeries& c) const {
  BlockMat out(*F_, n_);
  for (i64 i = 0; i < n_; ++i)
    for (i64 j = 0; j < n_; ++j) out.at(i, j) = at(i, j) * c;
  return out;
}

BlockMat BlockMat::twist(i64 k) const {
  BlockMat out(*F_, n_);
  for (i64 i = 0; i < n_; ++i)
    for (i64 j = 0; j < n_; ++j) out.at(i, j) = at(i, j).twist(k);
  return out;
}

BlockMat BlockMat::hyperderive(i64 n) const {
  BlockMat out(*F_, n_);
  for (i64 i = 0; i < n_; ++i)
    for (i64 j = 0; j < n_; ++j) out.at(i, j) = at(i, j).hyperderive(n);
  return out;
}

BlockMat BlockMat::transpose() const {
  BlockMat out(*F_, n_);
  for (i64 i = 0; i < n_; ++i)
    for (i64 j = 0; j < n_; ++j) out.at(i, j) = at(j, i);
  return out;
}

BlockMat BlockMat::submatrix(i64 r0, i64 c0, i64 n) const {
  if (r0 + n > n_ || c0 + n > n_) throw ShapeMismatch("submatrix out of range");
  BlockMat out(*F_, n);
  for (i64 i = 0; i < n; ++i)
    for (i64 j = 0; j < n; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

BlockMat BlockMat::inverse(i64 tprec_target, i64 u_prec) const {
  const i64 n = n_;
  i64 tp = tprec_target;
  if (tp == kNoBound) {
    tp = kExactPrec;
    for (const auto& x : e_) tp = sat_min(tp, x.tprec());
    if (tp >= kExactPrec)
      throw Error("inverse of an all-polynomial matrix needs a t-truncation target");
  }
  BlockMat work = *this;
  BlockMat inv = identity(*F_, n);
  for (i64 col = 0; col < n; ++col) {
    i64 piv = -1;
    for (i64 r = col; r < n; ++r) {
      if (is_unit_entry(work.at(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw SingularMatrix("no unit pivot available");
    if (piv != col) {
      for (i64 j = 0; j < n; ++j) {
        std::swap(work.at(piv, j), work.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const TSeries pinv = work.at(col, col).inverse(tp, u_prec);
    for (i64 j = 0; j < n; ++j) {
      work.at(col, j) = work.at(col, j) * pinv;
      inv.at(col, j) = inv.at(col, j) * pinv;
    }
    for (i64 r = 0; r < n; ++r) {
      if (r == col) continue;
      const TSeries f = work.at(r, col);
      if (exactly_zero_entry(f)) continue;
      for (i64 j = 0; j < n; ++j) {
        work.at(r, j) = work.at(r, j) - f * work.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

TSeries BlockMat::det(i64 tprec_target, i64 u_prec) const {
  const i64 n = n_;
  if (n == 0) return TSeries::constant(*F_, LaurentU::one(*F_));
  i64 tp = tprec_target;
  if (tp == kNoBound) {
    tp = kExactPrec;
    for (const auto& x : e_) tp = sat_min(tp, x.tprec());
    if (tp >= kExactPrec) {
      // All-polynomial matrix: minors have t-degree at most the sum of the
      // per-row maxima, so this truncation loses nothing.
      i64 bound = 1;
      for (i64 i = 0; i < n; ++i) {
        i64 row = 0;
        for (i64 j = 0; j < n; ++j) row = std::max(row, std::max<i64>(at(i, j).degree(), 0));
        bound += row;
      }
      tp = bound;
    }
  }
  BlockMat work = *this;
  bool negate = false;
  TSeries prev_inv = TSeries::constant(*F_, LaurentU::one(*F_));
  for (i64 col = 0; col + 1 < n; ++col) {
    i64 piv = -1;
    bool all_zero = true;
    for (i64 r = col; r < n; ++r) {
      if (!exactly_zero_entry(work.at(r, col))) all_zero = false;
      if (piv < 0 && is_unit_entry(work.at(r, col))) piv = r;
    }
    if (all_zero) return TSeries::zero(*F_);
    if (piv < 0) throw SingularMatrix("fraction-free elimination needs a unit pivot");
    if (piv != col) {
      negate = !negate;
      for (i64 j = 0; j < n; ++j) std::swap(work.at(piv, j), work.at(col, j));
    }
    const TSeries pk = work.at(col, col);
    for (i64 i = col + 1; i < n; ++i) {
      for (i64 j = col + 1; j < n; ++j) {
        const TSeries num = work.at(i, j) * pk - work.at(i, col) * work.at(col, j);
        work.at(i, j) = num * prev_inv;
      }
      work.at(i, col) = TSeries::zero(*F_);
    }
    prev_inv = pk.inverse(tp, u_prec);
  }
  TSeries d = work.at(n - 1, n - 1);
  return negate ? -d : d;
}

BlockMat BlockMat::power(i64 n, i64 tprec_target, i64 u_prec) const {
  if (n < 0) return inverse(tprec_target, u_prec).power(-n);
  BlockMat acc = identity(*F_, n_);
  BlockMat base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

bool BlockMat::known_nonzero() const {
  for (const auto& x : e_)
    if (x.known_nonzero()) return true;
  return false;
}

std::optional<i64> BlockMat::min_uvaluation() const {
  std::optional<i64> out;
  for (const auto& x : e_) {
    if (auto v = x.min_uvaluation()) out = out ? std::min(*out, *v) : *v;
  }
  return out;
}

i64 BlockMat::min_coeff_prec() const {
  i64 p = kExactPrec;
  for (const auto& x : e_) p = sat_min(p, x.min_coeff_prec());
  return p;
}

BlockMat rho(const TSeries& f, i64 k) {
  const Field& F = *f.field();
  std::vector<TSeries> derivs;
  derivs.reserve(static_cast<std::size_t>(k + 1));
  for (i64 m = 0; m <= k; ++m) derivs.push_back(f.hyperderive(m));
  BlockMat out(F, k + 1);
  for (i64 i = 0; i <= k; ++i)
    for (i64 j = i; j <= k; ++j) out.at(i, j) = derivs[static_cast<std::size_t>(j - i)];
  return out;
}

BlockMat rho_mat(const BlockMat& theta, i64 k) {
  const Field& F = *theta.field();
  const i64 r = theta.size();
  std::vector<BlockMat> derivs;
  derivs.reserve(static_cast<std::size_t>(k + 1));
  for (i64 m = 0; m <= k; ++m) derivs.push_back(theta.hyperderive(m));
  BlockMat out(F, r * (k + 1));
  for (i64 bi = 0; bi <= k; ++bi) {
    for (i64 bj = bi; bj <= k; ++bj) {
      const BlockMat& blk = derivs[static_cast<std::size_t>(bj - bi)];
      for (i64 i = 0; i < r; ++i)
        for (i64 j = 0; j < r; ++j) out.at(bi * r + i, bj * r + j) = blk.at(i, j);
    }
  }
  return out;
}

BlockStructureReport block_structure_check(const BlockMat& A, i64 r, i64 k, i64 l) {
  if (A.size() != r * (k + 1)) throw ShapeMismatch("matrix is not an r(k+1) block matrix");
  if (l < 0 || l > k) throw ShapeMismatch("level l must lie in [0, k]");
  const BlockMat theta = A.submatrix(0, 0, r);
  BlockStructureReport rep;
  rep.sub_pass = mat_residual(A.submatrix(0, 0, r * (l + 1)), rho_mat(theta, l)).pass;
  if (l == k) {
    rep.quotient_pass = true;  // empty quotient
  } else {
    const i64 off = r * (l + 1);
    rep.quotient_pass =
        mat_residual(A.submatrix(off, off, A.size() - off), rho_mat(theta, k - l - 1)).pass;
  }
  return rep;
}

Residual mat_residual(const BlockMat& a, const BlockMat& b) {
  if (a.size() != b.size()) throw ShapeMismatch("matrix sizes differ");
  Residual out;
  out.pass = true;
  out.precision = kExactPrec;
  for (i64 i = 0; i < a.size(); ++i) {
    for (i64 j = 0; j < a.size(); ++j) {
      const Residual r = tseries_residual(a.at(i, j), b.at(i, j));
      out.pass = out.pass && r.pass;
      out.precision = sat_min(out.precision, r.precision);
      if (r.valuation) out.valuation = out.valuation ? std::min(*out.valuation, *r.valuation) : *r.valuation;
    }
  }
  return out;
}

}  // namespace carlitz
