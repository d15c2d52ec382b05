#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace unitring {

using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~static_cast<u128>(0);

std::string to_string(u128 value);

// Parses a decimal string; rejects signs, whitespace and overflow.
std::optional<u128> parse_u128(std::string_view text);

// nullopt on overflow.
constexpr std::optional<u128> checked_mul(u128 a, u128 b) {
  if (a != 0 && b > kU128Max / a) return std::nullopt;
  return a * b;
}

// 2^n - 1 for 1 <= n <= 128.
constexpr u128 mersenne(unsigned n) {
  return n >= 128 ? kU128Max : (static_cast<u128>(1) << n) - 1;
}

}  // namespace unitring
