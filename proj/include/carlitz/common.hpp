#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace carlitz {

using i64 = std::int64_t;

// Absolute-precision sentinel: a value marked with kExactPrec is known exactly,
// i.e. every omitted coefficient is a true zero.
inline constexpr i64 kExactPrec = std::numeric_limits<i64>::max() / 4;

// "No bound supplied" marker for optional precision arguments.
inline constexpr i64 kNoBound = std::numeric_limits<i64>::min() / 4;

// Saturating add on precision/valuation bookkeeping.
inline i64 sat_add(i64 a, i64 b) {
  if (a >= kExactPrec || b >= kExactPrec) return kExactPrec;
  i64 s = a + b;
  return s > kExactPrec ? kExactPrec : s;
}

inline i64 sat_min(i64 a, i64 b) { return a < b ? a : b; }

// Multiply a by q^k with saturation at kExactPrec (a may be negative).
inline i64 sat_scale_pow(i64 a, i64 q, i64 k) {
  if (a >= kExactPrec) return kExactPrec;
  for (i64 i = 0; i < k; ++i) {
    if (a > kExactPrec / q || a < -(kExactPrec / q)) return a > 0 ? kExactPrec : -kExactPrec;
    a *= q;
  }
  return a;
}

inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Inversion was requested but no nonzero coefficient is known.
struct InversionOfZero : Error {
  using Error::Error;
};

// An inverse twist was requested on an element that is not a q-th power
// at the tracked precision.
struct PrecisionLoss : Error {
  using Error::Error;
};

// Partial sums of an evaluation fail the convergence guard.
struct DivergentEvaluation : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

}  // namespace carlitz
