#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace omitlab {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Stable 64-bit tag for a string (FNV-1a), used to key substreams by name.
std::uint64_t string_tag(std::string_view s) noexcept;

// Substream seed for a path of counters below `master`. Each path component is
// folded through splitmix64, so (master, {a, b}) and (master, {b, a}) differ and
// a stream never depends on how many values a sibling stream consumed.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path) noexcept;

inline Rng make_rng(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  return Rng(derive_seed(master, path));
}

}  // namespace omitlab
