#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace omlkit {

/// Subset of a lattice with at most 64 elements, one bit per element index.
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr bool has(Mask m, int i) { return (m >> i) & 1U; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Calls f(i) for every set bit i in ascending order.
template <typename F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

}  // namespace omlkit
