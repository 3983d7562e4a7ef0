#pragma once

#include <optional>
#include <vector>

#include "carlitz/tseries.hpp"

namespace carlitz {

// Dense square matrix over TSeries. Holds twist-action matrices, their jet
// images and rigid analytic trivializations. Dense on purpose: the Toeplitz
// structure of jet images is exploited when building them (shared derivative
// blocks), not in storage, because trivializations and intermediate Gauss
// results are not Toeplitz.
class BlockMat {
 public:
  BlockMat() = default;
  BlockMat(const Field& F, i64 n);  // zero matrix
  static BlockMat identity(const Field& F, i64 n);

  const Field* field() const { return F_; }
  i64 size() const { return n_; }
  TSeries& at(i64 i, i64 j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const TSeries& at(i64 i, i64 j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  friend BlockMat operator+(const BlockMat& a, const BlockMat& b);
  friend BlockMat operator-(const BlockMat& a, const BlockMat& b);
  friend BlockMat operator*(const BlockMat& a, const BlockMat& b) { return mul(a, b); }

  // Entry-parallel product (OpenMP over output entries); mul_serial is the
  // reference implementation kept for testing and benchmarking.
  static BlockMat mul(const BlockMat& a, const BlockMat& b);
  static BlockMat mul_serial(const BlockMat& a, const BlockMat& b);

  BlockMat scaled(const TSeries& c) const;
  BlockMat twist(i64 k) const;        // entry-wise
  BlockMat hyperderive(i64 n) const;  // entry-wise
  BlockMat transpose() const;
  BlockMat submatrix(i64 r0, i64 c0, i64 n) const;

  // Gauss-Jordan with explicit unit-pivot requirement (throws SingularMatrix
  // when no pivot with invertible constant term is available). tprec_target
  // caps the t-truncation when pivots are polynomials; u_prec caps coefficient
  // precision when a pivot's constant term is exact.
  BlockMat inverse(i64 tprec_target = kNoBound, i64 u_prec = kNoBound) const;

  // Fraction-free Gauss-Bareiss determinant; divisions are by the previous
  // pivot, which must be a unit in the series ring.
  TSeries det(i64 tprec_target = kNoBound, i64 u_prec = kNoBound) const;

  BlockMat power(i64 n, i64 tprec_target = kNoBound, i64 u_prec = kNoBound) const;

  bool known_nonzero() const;
  std::optional<i64> min_uvaluation() const;
  i64 min_coeff_prec() const;

 private:
  const Field* F_ = nullptr;
  i64 n_ = 0;
  std::vector<TSeries> e_;
};

// (k+1) x (k+1) upper-triangular Toeplitz jet image of a scalar: superdiagonal
// m holds the m-th hyperderivative. A ring homomorphism into matrices.
BlockMat rho(const TSeries& f, i64 k);

// Block version for an r x r matrix: r(k+1)-sized block upper-triangular
// Toeplitz matrix with block (i,j) the (j-i)-th entry-wise hyperderivative.
BlockMat rho_mat(const BlockMat& theta, i64 k);

struct BlockStructureReport {
  bool sub_pass = false;       // leading (l+1)r block equals the l-jet image
  bool quotient_pass = false;  // trailing (k-l)r block equals the (k-l-1)-jet image
};

// For A = rho_mat(theta, k), verifies the sub/quotient block structure at
// level l (the matrix shadow of the short exact sequence of prolongations).
BlockStructureReport block_structure_check(const BlockMat& A, i64 r, i64 k, i64 l);

Residual mat_residual(const BlockMat& a, const BlockMat& b);

}  // namespace carlitz
