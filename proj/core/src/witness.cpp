#include "omitlab/witness.hpp"

#include <algorithm>
#include <string>

#include "omitlab/error.hpp"

namespace omitlab {

std::string_view to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::sunflower: return "sunflower";
    case WitnessKind::fan: return "fan";
    case WitnessKind::omitting_pair: return "omitting-pair";
    case WitnessKind::independent_set: return "independent-set";
    case WitnessKind::matching: return "matching";
  }
  return "unknown";
}

namespace {

Edge intersect(const Edge& a, const Edge& b) {
  Edge out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool edges_in_host(const Witness& w, const Hypergraph& host) {
  if (w.edges.size() != w.edge_values.size()) return false;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (w.edges[i] >= host.edge_count()) return false;
    if (host.edge(w.edges[i]) != w.edge_values[i]) return false;
  }
  auto sorted = w.edges;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool validate(const Witness& w, const Hypergraph& host) {
  switch (w.kind) {
    case WitnessKind::independent_set:
      return w.vertices.size() == 1 && w.edges.empty() &&
             std::all_of(w.vertices[0].begin(), w.vertices[0].end(),
                         [&](Vertex v) { return v < host.vertex_count(); }) &&
             host.is_independent(w.vertices[0]);
    case WitnessKind::matching: {
      if (!edges_in_host(w, host)) return false;
      for (std::size_t a = 0; a < w.edge_values.size(); ++a)
        for (std::size_t b = a + 1; b < w.edge_values.size(); ++b)
          if (!intersect(w.edge_values[a], w.edge_values[b]).empty()) return false;
      return true;
    }
    case WitnessKind::omitting_pair: {
      if (!edges_in_host(w, host) || w.edge_values.size() != 2 || w.vertices.size() != 1)
        return false;
      return intersect(w.edge_values[0], w.edge_values[1]) == w.vertices[0];
    }
    case WitnessKind::sunflower: {
      if (!edges_in_host(w, host) || w.vertices.size() != 1 || w.edge_values.empty())
        return false;
      const Edge& core = w.vertices[0];
      for (const auto& e : w.edge_values)
        if (!std::includes(e.begin(), e.end(), core.begin(), core.end())) return false;
      for (std::size_t a = 0; a < w.edge_values.size(); ++a)
        for (std::size_t b = a + 1; b < w.edge_values.size(); ++b)
          if (intersect(w.edge_values[a], w.edge_values[b]) != core) return false;
      return true;
    }
    case WitnessKind::fan: {
      if (!edges_in_host(w, host) || w.vertices.size() != 1 || w.vertices[0].size() != 1)
        return false;
      const auto k = host.uniformity();
      if (!k || w.edge_values.size() != *k + 1) return false;
      const Vertex apex = w.vertices[0][0];
      const Edge& cross = w.edge_values.back();
      if (std::binary_search(cross.begin(), cross.end(), apex)) return false;
      for (std::size_t a = 0; a < *k; ++a) {
        if (intersect(w.edge_values[a], cross).size() != 1) return false;
        for (std::size_t b = a + 1; b < *k; ++b)
          if (intersect(w.edge_values[a], w.edge_values[b]) != Edge{apex}) return false;
      }
      return true;
    }
  }
  return false;
}

void require_valid(const Witness& w, const Hypergraph& host) {
  if (!validate(w, host)) {
    throw VerificationError(std::string("oracle produced an invalid ") +
                            std::string(to_string(w.kind)) + " witness");
  }
}

}  // namespace omitlab
