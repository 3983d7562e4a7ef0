#include "carlitz/field.hpp"

#include <algorithm>
#include <cassert>

namespace carlitz {

namespace {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

i64 pow_mod(i64 a, i64 n, i64 m) {
  i64 r = 1 % m;
  a %= m;
  while (n > 0) {
    if (n & 1) r = r * a % m;
    a = a * a % m;
    n >>= 1;
  }
  return r;
}

// C(a, b) mod p for 0 <= a, b < p.
i64 digit_binom(i64 a, i64 b, i64 p) {
  if (b < 0 || b > a) return 0;
  i64 r = 1;
  for (i64 t = 1; t <= b; ++t) {
    r = r * ((a - b + t) % p) % p;
    r = r * pow_mod(t % p, p - 2, p) % p;
  }
  return r;
}

// --- dense F_p[x] helpers used only during construction ---

void poly_trim(std::vector<int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, both over F_p, b monic.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, i64 p) {
  poly_trim(a);
  const i64 db = static_cast<i64>(b.size()) - 1;
  while (static_cast<i64>(a.size()) - 1 >= db) {
    const i64 shift = static_cast<i64>(a.size()) - 1 - db;
    const i64 c = a.back();
    for (i64 i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<int>(((a[shift + i] - c * b[i]) % p + p) % p);
    }
    poly_trim(a);
  }
  return a;
}

bool poly_is_irreducible(const std::vector<int>& f, i64 p) {
  const i64 deg = static_cast<i64>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Trial factor search: f of degree m is reducible iff some monic polynomial
  // of degree <= m/2 divides it.
  for (i64 dd = 1; dd <= deg / 2; ++dd) {
    i64 count = 1;
    for (i64 i = 0; i < dd; ++i) count *= p;
    for (i64 enc = 0; enc < count; ++enc) {
      std::vector<int> g(dd + 1, 0);
      i64 v = enc;
      for (i64 i = 0; i < dd; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      g[dd] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> smallest_irreducible(i64 p, i64 deg) {
  if (deg == 1) return {0, 1};  // x itself
  i64 count = 1;
  for (i64 i = 0; i < deg; ++i) count *= p;
  for (i64 enc = 0; enc < count; ++enc) {
    std::vector<int> f(deg + 1, 0);
    i64 v = enc;
    for (i64 i = 0; i < deg; ++i) {
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    f[deg] = 1;
    if (poly_is_irreducible(f, p)) return f;
  }
  throw ConfigError("no irreducible modulus found");  // unreachable for prime p
}

}  // namespace

int binom_mod_p(i64 top, i64 n, i64 p) {
  if (n < 0) return 0;
  if (top < 0) {
    const int r = binom_mod_p(n - top - 1, n, p);
    return (n & 1) ? static_cast<int>((p - r) % p) : r;
  }
  if (n > top) return 0;
  i64 acc = 1;
  while (top > 0 || n > 0) {
    acc = acc * digit_binom(top % p, n % p, p) % p;
    if (acc == 0) return 0;
    top /= p;
    n /= p;
  }
  return static_cast<int>(acc);
}

Field::Field(i64 p, i64 e, i64 d) : Field(FieldParams{p, e, d, smallest_irreducible(p, e * d)}) {}

Field::Field(FieldParams params) : params_(std::move(params)) {
  const i64 p = params_.p;
  if (!is_prime(p)) throw ConfigError("field characteristic must be prime");
  if (params_.e < 1 || params_.d < 1) throw ConfigError("field exponents must be >= 1");
  const i64 m = params_.e * params_.d;
  if (static_cast<i64>(params_.modulus.size()) != m + 1 || params_.modulus.back() != 1)
    throw ConfigError("modulus must be monic of degree e*d");
  for (int c : params_.modulus)
    if (c < 0 || c >= p) throw ConfigError("modulus coefficients must lie in [0, p)");
  if (!poly_is_irreducible(params_.modulus, p)) throw ConfigError("modulus is reducible over F_p");

  q_ = 1;
  for (i64 i = 0; i < params_.e; ++i) {
    q_ *= p;
    if (q_ > (1 << 20)) throw ConfigError("field size exceeds 2^20");
  }
  order_ = 1;
  for (i64 i = 0; i < m; ++i) {
    order_ *= p;
    if (order_ > (1 << 20)) throw ConfigError("field size exceeds 2^20");
  }
  build_tables();
}

namespace {

// Packed-digit polynomial product mod the modulus; used only to bootstrap the
// discrete-log tables.
std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b, const FieldParams& P) {
  const i64 p = P.p;
  const i64 m = static_cast<i64>(P.modulus.size()) - 1;
  std::vector<i64> da(m, 0), db(m, 0), prod(2 * m - 1, 0);
  for (i64 i = 0; i < m; ++i) {
    da[i] = a % p;
    a /= static_cast<std::uint32_t>(p);
    db[i] = b % p;
    b /= static_cast<std::uint32_t>(p);
  }
  for (i64 i = 0; i < m; ++i) {
    if (da[i] == 0) continue;
    for (i64 j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (i64 k = 2 * m - 2; k >= m; --k) {
    const i64 c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (i64 i = 0; i < m; ++i)
      prod[k - m + i] = ((prod[k - m + i] - c * P.modulus[i]) % p + p) % p;
  }
  std::uint32_t out = 0;
  for (i64 i = m - 1; i >= 0; --i) out = out * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(prod[i]);
  return out;
}

std::uint32_t raw_pow(std::uint32_t a, i64 n, const FieldParams& P) {
  std::uint32_t r = 1;
  while (n > 0) {
    if (n & 1) r = raw_mul(r, a, P);
    a = raw_mul(a, a, P);
    n >>= 1;
  }
  return r;
}

}  // namespace

void Field::build_tables() {
  const i64 Q = order_;
  const i64 n = Q - 1;

  // Multiplicative generator: smallest packed element whose order is Q-1.
  std::vector<i64> prime_factors;
  {
    i64 v = n;
    for (i64 f = 2; f * f <= v; ++f) {
      if (v % f == 0) {
        prime_factors.push_back(f);
        while (v % f == 0) v /= f;
      }
    }
    if (v > 1) prime_factors.push_back(v);
  }
  std::uint32_t g = 1;
  for (std::uint32_t cand = 2; static_cast<i64>(cand) < Q; ++cand) {
    bool ok = true;
    for (i64 f : prime_factors) {
      if (raw_pow(cand, n / f, params_) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  gen_ = FieldElem{g};

  exp_.assign(std::max<i64>(n, 1), 1);
  log_.assign(Q, 0);
  std::uint32_t acc = 1;
  for (i64 i = 0; i < n; ++i) {
    exp_[i] = acc;
    log_[acc] = static_cast<std::uint32_t>(i);
    acc = raw_mul(acc, g, params_);
  }

  if (n > 0) q_mod_ = q_ % n;

  if (Q <= 256) {
    add_lut_.assign(Q * Q, 0);
    const i64 p = params_.p;
    const i64 m = ext_degree();
    for (i64 a = 0; a < Q; ++a) {
      for (i64 b = 0; b < Q; ++b) {
        i64 va = a, vb = b, out = 0, mult = 1;
        for (i64 i = 0; i < m; ++i) {
          out += ((va + vb) % p) * mult;
          mult *= p;
          va /= p;
          vb /= p;
        }
        add_lut_[a * Q + b] = static_cast<std::uint32_t>(out);
      }
    }
  }
}

FieldElem Field::from_int(i64 n) const {
  const i64 p = params_.p;
  return {static_cast<std::uint32_t>(((n % p) + p) % p)};
}

FieldElem Field::from_coeffs(std::span<const int> c) const {
  const i64 p = params_.p;
  const i64 m = ext_degree();
  if (static_cast<i64>(c.size()) > m) throw ShapeMismatch("coefficient vector longer than e*d");
  std::uint32_t out = 0;
  for (i64 i = static_cast<i64>(c.size()) - 1; i >= 0; --i) {
    const i64 digit = ((c[i] % p) + p) % p;
    out = out * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(digit);
  }
  return {out};
}

std::vector<int> Field::coeffs(FieldElem x) const {
  const i64 p = params_.p;
  const i64 m = ext_degree();
  std::vector<int> out(m, 0);
  std::uint32_t v = x.v;
  for (i64 i = 0; i < m; ++i) {
    out[i] = static_cast<int>(v % p);
    v /= static_cast<std::uint32_t>(p);
  }
  return out;
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  if (params_.p == 2) return {a.v ^ b.v};
  if (!add_lut_.empty()) return {add_lut_[static_cast<i64>(a.v) * order_ + b.v]};
  const i64 p = params_.p;
  std::uint32_t va = a.v, vb = b.v, out = 0, mult = 1;
  for (i64 i = 0; i < ext_degree(); ++i) {
    out += ((va + vb) % p) * mult;
    mult *= static_cast<std::uint32_t>(p);
    va /= static_cast<std::uint32_t>(p);
    vb /= static_cast<std::uint32_t>(p);
  }
  return {out};
}

FieldElem Field::neg(FieldElem a) const {
  if (params_.p == 2) return a;
  const i64 p = params_.p;
  std::uint32_t v = a.v, out = 0, mult = 1;
  for (i64 i = 0; i < ext_degree(); ++i) {
    out += static_cast<std::uint32_t>((p - v % p) % p) * mult;
    mult *= static_cast<std::uint32_t>(p);
    v /= static_cast<std::uint32_t>(p);
  }
  return {out};
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  if (a.v == 0 || b.v == 0) return {0};
  const i64 n = order_ - 1;
  if (n == 0) return {1};
  return {exp_[(log_[a.v] + log_[b.v]) % n]};
}

FieldElem Field::inv(FieldElem a) const {
  if (a.v == 0) throw InversionOfZero("field inverse of zero");
  const i64 n = order_ - 1;
  if (n == 0) return {1};
  return {exp_[(n - log_[a.v]) % n]};
}

FieldElem Field::pow(FieldElem a, i64 n) const {
  if (n < 0) return pow(inv(a), -n);
  if (a.v == 0) return n == 0 ? one() : zero();
  const i64 m = order_ - 1;
  if (m == 0) return {1};
  const i64 ex = (static_cast<i64>(log_[a.v]) % m) * (n % m) % m;
  return {exp_[ex]};
}

FieldElem Field::frobenius(FieldElem x, i64 k) const {
  if (x.v == 0) return x;
  const i64 m = order_ - 1;
  if (m == 0) return x;
  // x -> x^q has order d on F_{q^d}, so reduce k mod d; on logs one step
  // multiplies by q mod (Q-1).
  const i64 step = ((k % params_.d) + params_.d) % params_.d;
  i64 lg = log_[x.v];
  for (i64 i = 0; i < step; ++i) lg = lg * q_mod_ % m;
  return {exp_[lg]};
}

i64 Field::degree_over_base(FieldElem x) const {
  for (i64 dd = 1; dd <= params_.d; ++dd) {
    if (params_.d % dd != 0) continue;
    if (frobenius(x, dd) == x) return dd;
  }
  return params_.d;
}

std::vector<FieldElem> Field::elements_of_degree(i64 dd, std::size_t cap) const {
  std::vector<FieldElem> out;
  for (i64 v = 1; v < order_ && out.size() < cap; ++v) {
    FieldElem x{static_cast<std::uint32_t>(v)};
    if (degree_over_base(x) == dd) out.push_back(x);
  }
  return out;
}

}  // namespace carlitz
