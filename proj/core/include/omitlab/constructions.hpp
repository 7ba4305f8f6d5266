#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "omitlab/bipartite.hpp"
#include "omitlab/hypergraph.hpp"

namespace omitlab {

using Rational = boost::multiprecision::cpp_rational;

// S_lambda^k(l) on l + lambda (k - l) vertices: the core is [0, l), petal i
// occupies the next k - l vertices.
Hypergraph sunflower(std::size_t k, std::size_t l, std::size_t lambda);

// F^k on k(k-1)+1 vertices. Apex 0; E_i = {0} + [1 + i(k-1), 1 + (i+1)(k-1));
// the crossing edge takes the first petal vertex of each E_i and is listed
// last in construction order (canonical edge order may differ).
Hypergraph fan(std::size_t k);

// L_{m,n}: vertex (x, y) in [1,m] x [1,n] maps to (x-1) n + (y-1); edges
// {(x1,y1), (x1,y2), (x2,y2), ..., (x_{k-1},y2)} with x1 < ... < x_{k-1} and
// y1 > y2. m or n too small for any edge gives the empty hypergraph.
Hypergraph l_construction(std::size_t m, std::size_t n, std::size_t k);

// Ramsey parameters for the fan: m = floor(t/2), n = floor((t-1)/(2(k-2))).
std::pair<std::size_t, std::size_t> ramsey_fan_parameters(std::size_t t, std::size_t k);

Hypergraph perfect_matching(std::size_t n, std::size_t k);
Hypergraph complete_hypergraph(std::size_t n, std::size_t k);

// One edge per left vertex, equal to its neighbourhood on the right side.
// Duplicate neighbourhoods collapse (see Hypergraph::collapsed_duplicates).
Hypergraph incidence_hypergraph(const BipartiteGraph& g);

// m distinct uniformly random k-subsets of [n] (m capped at C(n, k)).
Hypergraph random_uniform(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);

// Random greedy (n,k,l)-omitting system: `attempts` random k-sets, each kept
// when it meets no kept edge in exactly l vertices.
Hypergraph random_omitting_system(std::size_t n, std::size_t k, std::size_t l,
                                  std::size_t attempts, std::uint64_t seed);

struct SunflowerPlacement {
  std::size_t core_size = 1;
  std::size_t petals = 2;
};

// Union of k-uniform sunflowers, each placed on [n] through an independent
// random injection. Overlaps between placements are allowed.
Hypergraph sunflower_union(std::size_t n, std::size_t k,
                           const std::vector<SunflowerPlacement>& placements,
                           std::uint64_t seed);

// P([l+1] subset of I) for a uniform tau-subset I of [m]:
// C(m-l-1, tau-l-1) / C(m, tau).
Rational p_tau(std::size_t m, std::size_t l, std::size_t tau);

// Default tau = ceil(100 (log n)^{1/l}).
std::size_t default_tau(std::size_t n, std::size_t l, double constant = 100.0);

}  // namespace omitlab
