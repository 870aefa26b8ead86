#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "trirep/errors.hpp"

namespace trirep {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("int64 overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("int64 overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("int64 overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

/// Quotient num / den, throwing InvariantViolation unless den divides num.
inline std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw InvariantViolation(std::string(what) + ": " + std::to_string(num) +
                             " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

/// floor(sqrt(v)) for v >= 0.
inline std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  __extension__ typedef __int128 wide;
  while (r > 0 && wide{r} * r > v) --r;
  while (wide{r + 1} * (r + 1) <= v) ++r;
  return r;
}

/// sqrt(v) if v is a perfect square, -1 otherwise.
inline std::int64_t exact_sqrt(std::int64_t v) {
  if (v < 0) return -1;
  const std::int64_t r = isqrt(v);
  return r * r == v ? r : -1;
}

inline std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace trirep
