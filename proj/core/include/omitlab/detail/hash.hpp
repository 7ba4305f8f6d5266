#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace omitlab::detail {

struct VectorHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace omitlab::detail
