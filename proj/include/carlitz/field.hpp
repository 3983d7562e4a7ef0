#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "carlitz/common.hpp"

namespace carlitz {

// Residue of the integer binomial coefficient C(top, n) in Z/pZ, computed by
// Lucas' theorem on base-p digits. Negative upper index is supported through
// C(-a, n) = (-1)^n C(a+n-1, n); n < 0 or n > top >= 0 gives 0.
int binom_mod_p(i64 top, i64 n, i64 p);

struct FieldParams {
  i64 p = 2;                 // characteristic
  i64 e = 1;                 // q = p^e
  i64 d = 1;                 // extension degree over F_q
  std::vector<int> modulus;  // monic irreducible over F_p, degree e*d, coeffs low-to-high
  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

// Element of F_{q^d}, stored as packed base-p digits of its coordinate vector
// w.r.t. the power basis of the modulus. All arithmetic goes through Field.
struct FieldElem {
  std::uint32_t v = 0;
  friend bool operator==(FieldElem, FieldElem) = default;
};

// Arithmetic context for F_{q^d} with q = p^e. Multiplication, inversion and
// Frobenius run on discrete-log tables built once at construction; the packed
// representation keeps elements trivially copyable. Instances are immutable
// after construction and shared by pointer.
class Field {
 public:
  // Chooses the modulus deterministically: the monic irreducible polynomial of
  // degree e*d over F_p with the smallest packed coefficient value.
  Field(i64 p, i64 e, i64 d);
  explicit Field(FieldParams params);  // validates irreducibility by trial factor search

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  i64 p() const { return params_.p; }
  i64 e() const { return params_.e; }
  i64 d() const { return params_.d; }
  i64 q() const { return q_; }          // p^e
  i64 order() const { return order_; }  // q^d
  i64 ext_degree() const { return static_cast<i64>(params_.modulus.size()) - 1; }  // e*d
  const FieldParams& params() const { return params_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(i64 n) const;  // n mod p in the prime field
  FieldElem from_coeffs(std::span<const int> c) const;
  std::vector<int> coeffs(FieldElem x) const;  // length e*d, digits low-to-high

  bool is_zero(FieldElem x) const { return x.v == 0; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;  // throws InversionOfZero on 0
  FieldElem pow(FieldElem a, i64 n) const;

  // x^{q^k}; k < 0 applies the inverse automorphism (q-th roots).
  FieldElem frobenius(FieldElem x, i64 k) const;
  FieldElem qth_root(FieldElem x) const { return frobenius(x, -1); }

  // Membership in F_q = fixed field of x -> x^q.
  bool in_base_field(FieldElem x) const { return frobenius(x, 1) == x; }
  // Degree of the minimal polynomial of x over F_q (a divisor of d).
  i64 degree_over_base(FieldElem x) const;

  // Fixed multiplicative generator (smallest packed primitive element).
  FieldElem generator() const { return gen_; }
  // Elements of exact degree dd over F_q, in packed order, at most cap of them.
  std::vector<FieldElem> elements_of_degree(i64 dd, std::size_t cap) const;

 private:
  void build_tables();

  FieldParams params_;
  i64 q_ = 0;
  i64 order_ = 0;
  FieldElem gen_{0};
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, order-1)
  std::vector<std::uint32_t> log_;  // log_[x] for x != 0
  std::vector<std::uint32_t> add_lut_;  // digit-wise sum, built only for small fields
  i64 q_mod_ = 0;                       // q mod (order-1), for Frobenius on logs
};

}  // namespace carlitz
