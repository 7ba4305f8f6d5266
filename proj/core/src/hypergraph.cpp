#include "omitlab/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "omitlab/error.hpp"

namespace omitlab {

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges,
                       std::size_t mask_threshold)
    : n_(n) {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2) {
      throw InputError("hypergraph edge must have at least two vertices");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InputError("hypergraph edge repeats a vertex");
    }
    if (e.back() >= n) {
      throw InputError("hypergraph edge vertex " + std::to_string(e.back()) +
                       " outside [0, " + std::to_string(n) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  duplicates_ = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  edges_ = std::move(edges);

  if (!edges_.empty()) {
    const std::size_t k = edges_.front().size();
    bool uniform = std::all_of(edges_.begin(), edges_.end(),
                               [k](const Edge& e) { return e.size() == k; });
    if (uniform) uniform_k_ = k;
  }

  if (n_ <= std::min(mask_threshold, kMaxMaskBits)) {
    masks_.reserve(edges_.size());
    for (const auto& e : edges_) {
      VertexMask m;
      for (Vertex v : e) m.set(v);
      masks_.push_back(m);
    }
  }
}

std::optional<std::size_t> Hypergraph::find_edge(
    std::span<const Vertex> sorted_edge) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), sorted_edge,
      [](const Edge& a, std::span<const Vertex> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      });
  if (it != edges_.end() && std::equal(it->begin(), it->end(), sorted_edge.begin(),
                                       sorted_edge.end())) {
    return static_cast<std::size_t>(it - edges_.begin());
  }
  return std::nullopt;
}

std::size_t Hypergraph::intersection_size(std::size_t a, std::size_t b) const {
  if (!masks_.empty()) return (masks_[a] & masks_[b]).count();
  return sorted_intersection_size(edges_[a], edges_[b]);
}

std::vector<std::size_t> Hypergraph::vertex_degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++deg[v];
  return deg;
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (Vertex v : edges_[i]) inc[v].push_back(i);
  return inc;
}

bool Hypergraph::is_independent(std::span<const Vertex> vertices) const {
  std::vector<char> in(n_, 0);
  for (Vertex v : vertices) {
    if (v >= n_) throw InputError("vertex outside hypergraph universe");
    in[v] = 1;
  }
  for (const auto& e : edges_) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v] != 0; }))
      return false;
  }
  return true;
}

std::size_t require_uniform(const Hypergraph& h, const char* operation) {
  if (h.empty()) return 0;
  if (!h.uniformity()) {
    throw InputError(std::string(operation) + " requires a uniform hypergraph");
  }
  return *h.uniformity();
}

std::size_t sorted_intersection_size(std::span<const Vertex> a,
                                     std::span<const Vertex> b) {
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

bool is_subset_sorted(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

VertexSet normalize_vertex_set(std::span<const Vertex> vertices, std::size_t n) {
  VertexSet s(vertices.begin(), vertices.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && s.back() >= n) {
    throw InputError("vertex " + std::to_string(s.back()) + " outside [0, " +
                     std::to_string(n) + ")");
  }
  return s;
}

}  // namespace omitlab
