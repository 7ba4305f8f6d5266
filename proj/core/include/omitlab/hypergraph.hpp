#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace omitlab {

using Vertex = std::uint32_t;
// Sorted, duplicate-free list of vertex indices.
using Edge = std::vector<Vertex>;
using VertexSet = std::vector<Vertex>;

inline constexpr std::size_t kMaxMaskBits = 128;
using VertexMask = std::bitset<kMaxMaskBits>;

// A finite hypergraph on the vertex universe [0, n).
//
// Edges are stored sorted and deduplicated in lexicographic order, so two
// hypergraphs with the same edge set compare equal and serialize identically.
// Edge indices refer to this canonical order. When n does not exceed the mask
// threshold each edge also carries a bit mask used by intersection queries.
//
// Instances are immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n) : n_(n) {}

  // Sorts every edge, collapses duplicate edges (counted, not rejected) and
  // validates sizes and ranges. Throws InputError on an edge with fewer than
  // two vertices, a repeated vertex inside an edge, or an out-of-range vertex.
  Hypergraph(std::size_t n, std::vector<Edge> edges,
             std::size_t mask_threshold = kMaxMaskBits);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  // Common edge size when every edge has the same size; nullopt for mixed
  // sizes and for the empty hypergraph.
  std::optional<std::size_t> uniformity() const noexcept { return uniform_k_; }

  // Number of input edges dropped as duplicates during construction.
  std::size_t collapsed_duplicates() const noexcept { return duplicates_; }

  std::optional<std::size_t> find_edge(std::span<const Vertex> sorted_edge) const;
  bool contains_edge(std::span<const Vertex> sorted_edge) const {
    return find_edge(sorted_edge).has_value();
  }

  bool has_masks() const noexcept { return !masks_.empty() || edges_.empty(); }
  std::size_t intersection_size(std::size_t a, std::size_t b) const;

  std::vector<std::size_t> vertex_degrees() const;
  // incidence()[v] lists the indices of edges containing v, ascending.
  std::vector<std::vector<std::size_t>> incidence() const;

  // True iff no edge lies entirely inside `vertices` (any order, duplicates ok).
  bool is_independent(std::span<const Vertex> vertices) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> masks_;
  std::optional<std::size_t> uniform_k_;
  std::size_t duplicates_ = 0;
};

// Returns the common edge size, 0 for the empty hypergraph; throws InputError
// naming `operation` when edge sizes differ.
std::size_t require_uniform(const Hypergraph& h, const char* operation);

// Sorted-merge intersection size of two sorted vertex lists.
std::size_t sorted_intersection_size(std::span<const Vertex> a,
                                     std::span<const Vertex> b);

bool is_subset_sorted(std::span<const Vertex> small, std::span<const Vertex> big);

// Sorts, deduplicates and range-checks a caller-supplied vertex subset.
VertexSet normalize_vertex_set(std::span<const Vertex> vertices, std::size_t n);

}  // namespace omitlab
