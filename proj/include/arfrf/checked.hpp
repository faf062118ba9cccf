#pragma once

#include "arfrf/error.hpp"

#include <cstdint>
#include <limits>
#include <numeric>

namespace arfrf {

using Int = std::int64_t;

// Overflow-checked 64-bit arithmetic. Every quantity in the library goes
// through these helpers so that a sweep can never silently wrap.

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min())
    throw OverflowError("integer overflow in negation");
  return -a;
}

inline Int narrow_int128(__int128 v) {
  if (v > std::numeric_limits<Int>::max() ||
      v < std::numeric_limits<Int>::min())
    throw OverflowError("integer overflow narrowing 128-bit value");
  return static_cast<Int>(v);
}

/// Floor division for a positive divisor.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

/// Non-negative remainder for a positive modulus.
inline Int mod_pos(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace arfrf
