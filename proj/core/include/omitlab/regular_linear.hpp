#pragma once

#include <cstddef>
#include <cstdint>

#include "omitlab/hypergraph.hpp"

namespace omitlab {

struct RegularLinearOptions {
  std::size_t permutations_per_level = 200;
  std::size_t restarts = 5;
  std::size_t swaps_per_vertex = 50;  // hill-climbing cap = swaps_per_vertex * n
};

struct RegularLinearStats {
  std::size_t restarts_used = 0;
  std::size_t permutations_tried = 0;
};

// d-regular linear k-graph on [n] as a union of d perfect matchings. Level 1
// is the matching {0..k-1}, {k..2k-1}, ...; every further level is a permuted
// copy placed so that no new edge covers an already covered pair, found by
// random permutation plus swap hill-climbing. The output is re-verified
// (regular, linear) before return. Throws InputError unless k | n and
// d <= (n-1)/(k-1); throws ConstructionFailed with the deepest level reached
// once the retry budget is spent.
Hypergraph regular_linear(std::size_t n, std::size_t k, std::size_t d, std::uint64_t seed,
                          const RegularLinearOptions& options = {},
                          RegularLinearStats* stats = nullptr);

}  // namespace omitlab
