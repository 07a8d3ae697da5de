#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>

namespace puregaps {

/// Cardinalities and bound values. Closed forms grow like q^10, which leaves
/// 64 bits behind around q ~ 70.
__extension__ typedef __int128 WideInt;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("64-bit overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline WideInt checked_add(WideInt x, WideInt y) {
  WideInt r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("128-bit overflow in addition");
  return r;
}

inline WideInt checked_sub(WideInt x, WideInt y) {
  WideInt r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("128-bit overflow in subtraction");
  return r;
}

inline WideInt checked_mul(WideInt x, WideInt y) {
  WideInt r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("128-bit overflow in multiplication");
  return r;
}

/// Evaluates c[0] + c[1] x + ... + c[n] x^n by Horner's rule with overflow checks.
template <typename Coeffs>
WideInt checked_polynomial(const Coeffs& ascending, WideInt x) {
  WideInt acc = 0;
  for (auto it = std::rbegin(ascending); it != std::rend(ascending); ++it) {
    acc = checked_add(checked_mul(acc, x), static_cast<WideInt>(*it));
  }
  return acc;
}

/// floor(a / b) for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// ceil(a / b) for b > 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::string to_string(WideInt value);

/// Narrows to int64 when the value fits.
std::optional<std::int64_t> narrow_to_int64(WideInt value);

}  // namespace puregaps
