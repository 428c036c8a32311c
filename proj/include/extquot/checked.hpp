#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>

#include "extquot/error.hpp"

// Overflow-checked 64-bit integer arithmetic. The lattice layer never wraps.
namespace extquot::checked {

using Int = std::int64_t;

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

/// Floor modulus, result in [0, m) for m > 0.
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int gcd(Int a, Int b) { return std::gcd(abs(a), abs(b)); }

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return mul(abs(a) / gcd(a, b), abs(b));
}

} // namespace extquot::checked
