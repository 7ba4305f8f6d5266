#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "omitlab/hypergraph.hpp"

namespace omitlab {

enum class WitnessKind { sunflower, fan, omitting_pair, independent_set, matching };

std::string_view to_string(WitnessKind kind) noexcept;

// Self-certifying evidence returned by the oracles. Edges are recorded both by
// index into the host's canonical edge list and by value, so a witness can be
// re-checked against a reloaded copy of the host.
//
// Layout per kind:
//   sunflower       vertices = {core}; edge_values = the petals' edges
//   fan             vertices = {{apex}}; edge_values = E_1..E_k then E
//   omitting_pair   vertices = {intersection}; edge_values = the two edges
//   independent_set vertices = {set}; no edges
//   matching        edge_values = pairwise disjoint edges
struct Witness {
  WitnessKind kind = WitnessKind::independent_set;
  std::vector<VertexSet> vertices;
  std::vector<std::size_t> edges;
  std::vector<Edge> edge_values;
};

// Re-checks the witness against `host` by direct definition check.
bool validate(const Witness& w, const Hypergraph& host);

// Throws VerificationError when validate() fails; used by every oracle before
// it returns a witness.
void require_valid(const Witness& w, const Hypergraph& host);

}  // namespace omitlab
