#include "omitlab/hypergraph_ops.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "omitlab/combinatorics.hpp"
#include "omitlab/detail/hash.hpp"
#include "omitlab/error.hpp"

namespace omitlab {

std::vector<Edge> all_subsets(std::size_t n, std::size_t r) {
  std::vector<Vertex> universe(n);
  std::iota(universe.begin(), universe.end(), Vertex{0});
  std::vector<Edge> out;
  for_each_subset<Vertex>(universe, r, [&](std::span<const Vertex> s) {
    out.emplace_back(s.begin(), s.end());
    return true;
  });
  return out;
}

Edge sorted_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  Edge out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LinkResult link(const Hypergraph& h, std::span<const Vertex> s) {
  const VertexSet core = normalize_vertex_set(s, h.vertex_count());
  LinkResult result;
  std::vector<Edge> residues;
  for (const auto& e : h.edges()) {
    if (!is_subset_sorted(core, e)) continue;
    Edge r = sorted_difference(e, core);
    if (r.size() <= 1) {
      ++result.small_edges;
    } else {
      residues.push_back(std::move(r));
    }
  }
  result.link = Hypergraph(h.vertex_count(), std::move(residues));
  return result;
}

std::size_t set_degree(const Hypergraph& h, std::span<const Vertex> s) {
  const VertexSet core = normalize_vertex_set(s, h.vertex_count());
  return static_cast<std::size_t>(
      std::count_if(h.edges().begin(), h.edges().end(),
                    [&](const Edge& e) { return is_subset_sorted(core, e); }));
}

Hypergraph shadow(const Hypergraph& h, std::size_t i) {
  if (h.empty()) return Hypergraph(h.vertex_count());
  const std::size_t k = require_uniform(h, "shadow");
  if (i == 0 || i >= k || k - i < 2) {
    throw InputError("shadow: need 1 <= i and k - i >= 2 (k=" + std::to_string(k) +
                     ", i=" + std::to_string(i) + ")");
  }
  std::vector<Edge> out;
  for (const auto& e : h.edges()) {
    for_each_subset<Vertex>(e, k - i, [&](std::span<const Vertex> a) {
      out.emplace_back(a.begin(), a.end());
      return true;
    });
  }
  return Hypergraph(h.vertex_count(), std::move(out));
}

std::size_t max_i_degree(const Hypergraph& h, std::size_t i) {
  std::unordered_map<Edge, std::size_t, detail::VectorHash> counts;
  std::size_t best = 0;
  for (const auto& e : h.edges()) {
    for_each_subset<Vertex>(e, i, [&](std::span<const Vertex> a) {
      auto& c = counts[Edge(a.begin(), a.end())];
      best = std::max(best, ++c);
      return true;
    });
  }
  return best;
}

namespace {

std::size_t max_codegree(const Hypergraph& h, std::size_t k) {
  // Group edges by their (k-1)-subsets; the vertices completing one
  // (k-1)-set S to an edge pairwise share S as a codegree witness.
  std::unordered_map<Edge, std::vector<Vertex>, detail::VectorHash> completions;
  for (const auto& e : h.edges()) {
    for (std::size_t drop = 0; drop < k; ++drop) {
      Edge s;
      s.reserve(k - 1);
      for (std::size_t j = 0; j < k; ++j)
        if (j != drop) s.push_back(e[j]);
      completions[std::move(s)].push_back(e[drop]);
    }
  }
  std::unordered_map<std::uint64_t, std::size_t> pair_counts;
  std::size_t best = 0;
  for (auto& [s, us] : completions) {
    std::sort(us.begin(), us.end());
    for (std::size_t a = 0; a < us.size(); ++a) {
      for (std::size_t b = a + 1; b < us.size(); ++b) {
        const std::uint64_t key = (static_cast<std::uint64_t>(us[a]) << 32) | us[b];
        best = std::max(best, ++pair_counts[key]);
      }
    }
  }
  return best;
}

}  // namespace

DegreeReport degree_profile(const Hypergraph& h) {
  DegreeReport r;
  const std::size_t k = require_uniform(h, "degree_profile");
  r.k = k;
  r.max_i_degree.assign(k == 0 ? 1 : k, 0);
  for (std::size_t i = 1; i + 1 <= k; ++i) r.max_i_degree[i] = max_i_degree(h, i);
  r.max_degree = k >= 2 ? r.max_i_degree[1] : 0;
  r.codegree_max = k >= 2 ? max_codegree(h, k) : 0;
  if (h.vertex_count() > 0) {
    std::size_t num = k * h.edge_count();
    std::size_t den = h.vertex_count();
    const std::size_t g = std::gcd(num, den);
    r.average_degree_num = num / g;
    r.average_degree_den = den / g;
  }
  return r;
}

std::size_t CycleCensus::total_pairs() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

CycleCensus cycle_census(const Hypergraph& h) {
  CycleCensus c;
  const std::size_t k = require_uniform(h, "cycle_census");
  c.counts.assign(k, 0);
  const std::size_t m = h.edge_count();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) ++c.counts[h.intersection_size(a, b)];
  for (std::size_t j = 2; j < k; ++j)
    if (c.counts[j] != 0) c.is_linear = false;
  return c;
}

Hypergraph cartesian_product(const Hypergraph& h, std::span<const Hypergraph> family) {
  const std::size_t n = h.vertex_count();
  if (family.size() != n) {
    throw InputError("cartesian_product: family size " + std::to_string(family.size()) +
                     " != vertex count " + std::to_string(n));
  }
  const std::size_t m = n == 0 ? 0 : family.front().vertex_count();
  for (const auto& f : family) {
    if (f.vertex_count() != m) {
      throw InputError("cartesian_product: family members differ in vertex count");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(h.edge_count() * m);
  for (const auto& e : h.edges()) {
    for (std::size_t v = 0; v < m; ++v) {
      Edge lifted;
      lifted.reserve(e.size());
      for (Vertex x : e) lifted.push_back(static_cast<Vertex>(x * m + v));
      edges.push_back(std::move(lifted));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : family[i].edges()) {
      Edge lifted;
      lifted.reserve(f.size());
      for (Vertex x : f) lifted.push_back(static_cast<Vertex>(i * m + x));
      edges.push_back(std::move(lifted));
    }
  }
  return Hypergraph(n * m, std::move(edges));
}

Hypergraph induced(const Hypergraph& h, std::span<const Vertex> u) {
  const VertexSet keep = normalize_vertex_set(u, h.vertex_count());
  std::vector<std::int64_t> label(h.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) label[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return label[v] >= 0; })) {
      Edge r;
      r.reserve(e.size());
      for (Vertex v : e) r.push_back(static_cast<Vertex>(label[v]));
      edges.push_back(std::move(r));
    }
  }
  return Hypergraph(keep.size(), std::move(edges));
}

RegularityReport regularity_audit(const Hypergraph& h, double c, double d1, double d2) {
  RegularityReport r;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const double size = static_cast<double>(h.edge(i).size());
    if (size < d1 / c || size > c * d1) {
      r.uniform = false;
      r.offending_edges.push_back(i);
    }
  }
  const auto deg = h.vertex_degrees();
  for (std::size_t v = 0; v < deg.size(); ++v) {
    const double d = static_cast<double>(deg[v]);
    if (d < d2 / c || d > c * d2) {
      r.regular = false;
      r.offending_vertices.push_back(static_cast<Vertex>(v));
    }
  }
  return r;
}

}  // namespace omitlab
