#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "omitlab/hypergraph.hpp"

namespace omitlab {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

constexpr std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = saturating_mul(r, base);
    if (r == kSaturated) break;
  }
  return r;
}

// C(n, r); saturates at kSaturated instead of overflowing.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t num = n - r + i;
    const std::uint64_t g2 = std::gcd(num, i / g);
    result = saturating_mul(result / g, num / g2);
    if (result == kSaturated) return kSaturated;
    result /= (i / g) / g2;
  }
  return result;
}

// Calls f(std::span<const T>) for every r-element subset of `items`, in
// lexicographic order of positions. Stops early when f returns false.
template <class T, class F>
bool for_each_subset(std::span<const T> items, std::size_t r, F&& f) {
  const std::size_t n = items.size();
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<T> cur(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) cur[i] = items[idx[i]];
    if (!f(std::span<const T>(cur))) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// All r-subsets of [0, n) as sorted edges, lexicographic.
std::vector<Edge> all_subsets(std::size_t n, std::size_t r);

// Set difference of two sorted lists.
Edge sorted_difference(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace omitlab
