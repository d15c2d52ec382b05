#include "unitring/u128.hpp"

#include <algorithm>

namespace unitring {

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<u128> parse_u128(std::string_view text) {
  if (text.empty()) return std::nullopt;
  u128 value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    auto scaled = checked_mul(value, 10);
    if (!scaled) return std::nullopt;
    const auto digit = static_cast<u128>(c - '0');
    if (*scaled > kU128Max - digit) return std::nullopt;
    value = *scaled + digit;
  }
  return value;
}

}  // namespace unitring
