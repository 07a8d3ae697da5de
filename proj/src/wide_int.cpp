#include "puregaps/wide_int.hpp"

#include <algorithm>
#include <limits>

namespace puregaps {

std::string to_string(WideInt value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work with the negated magnitude so INT128_MIN does not overflow.
  WideInt v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<std::int64_t> narrow_to_int64(WideInt value) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace puregaps
