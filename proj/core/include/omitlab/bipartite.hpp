#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omitlab/hypergraph.hpp"

namespace omitlab {

// Bipartite graph with parts [0, left) and [0, right); adjacency is stored per
// left vertex as a sorted neighbor list.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t left, std::size_t right,
                 std::vector<std::vector<Vertex>> adjacency);

  std::size_t left_count() const noexcept { return left_; }
  std::size_t right_count() const noexcept { return right_; }
  std::size_t edge_count() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(std::size_t left_vertex) const {
    return adjacency_.at(left_vertex);
  }
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adjacency_; }
  bool has_edge(std::size_t left_vertex, Vertex right_vertex) const;

  std::vector<std::size_t> right_degrees() const;
  // transpose()[r] lists the left neighbors of right vertex r, ascending.
  std::vector<std::vector<Vertex>> transpose() const;

  // Common degree of each side, if that side is regular (empty sides count).
  std::optional<std::size_t> left_regular_degree() const;
  std::optional<std::size_t> right_regular_degree() const;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
};

// G(q^l, q^2, 2, l): left = polynomials of degree <= l-1 over GF(q) (index
// order of polynomial_from_index), right = points (x, y) flattened x*q + y,
// edge iff y = P(x). Throws UnsupportedModulus for composite q and InputError
// when q^l * q adjacency entries exceed `max_entries`.
BipartiteGraph build_polynomial_graph(std::uint32_t q, std::size_t l,
                                      std::uint64_t max_entries = 1ull << 28);

struct MixingReport {
  std::size_t edges_between = 0;
  double expected = 0.0;     // d1 |X| |Y| / n_right
  double discrepancy = 0.0;  // |e(X,Y) - expected|
  double bound = 0.0;        // lambda sqrt(|X| |Y|)
  bool pass = true;
};

// Requires a left-regular graph. `pass` compares with a relative slack of
// 1e-9 to absorb rounding in a numerically measured lambda.
MixingReport mixing_discrepancy(const BipartiteGraph& g, std::span<const Vertex> x,
                                std::span<const Vertex> y, double lambda);

struct BicliqueWitness {
  Vertex left_a = 0;
  Vertex left_b = 0;
  std::vector<Vertex> common;  // exactly l right vertices
};

// Looks for two left vertices with at least l common neighbors (a K_{2,l}).
// Returns the lexicographically first pair found, or nullopt.
std::optional<BicliqueWitness> k2l_free_check(const BipartiteGraph& g, std::size_t l);

struct MixingSweep {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  double max_ratio = 0.0;  // max discrepancy / bound over pairs with bound > 0
};

// `pairs` random nonempty (X, Y): sizes uniform in [1, side], members a
// uniform subset of that size. Draws from the substream (seed, "mixing").
MixingSweep random_mixing_sweep(const BipartiteGraph& g, double lambda, std::size_t pairs,
                                std::uint64_t seed);

// "BIPARTITE m n_right e" header, then one "left right" pair per line.
void write_bipartite(std::ostream& out, const BipartiteGraph& g);
BipartiteGraph read_bipartite(std::istream& in);
std::string to_bipartite_text(const BipartiteGraph& g);

}  // namespace omitlab
