#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "omitlab/hypergraph.hpp"

namespace omitlab {

// One k-graph per base edge E_i, member i living on [|E_i|], and a bijection
// psi_i from E_i onto [|E_i|]: psi[i][j] is the image of the j-th (ascending)
// vertex of E_i.
struct FittingFamily {
  Hypergraph base;
  std::vector<Hypergraph> members;
  std::vector<std::vector<Vertex>> psi;
};

// Throws InputError unless every member and bijection matches its base edge.
void validate_fitting(const FittingFamily& f);

// Member i = all k-subsets of [m_i] containing [l+1] (0-based: {0..l}).
// psi_i is a uniform permutation drawn from the substream (seed, "psi", i).
FittingFamily fitting_family_star(const Hypergraph& base, std::size_t k, std::size_t l,
                                  std::uint64_t seed);

// The star member itself: all k-subsets of [m] containing [l+1].
Hypergraph star_member(std::size_t m, std::size_t k, std::size_t l);

struct RealizeReport {
  Hypergraph hypergraph;
  std::size_t member_edges = 0;  // sum of member edge counts
  // Realized sets produced by more than one base edge.
  std::size_t coincident() const { return member_edges - hypergraph.edge_count(); }
};

// H(F): S subset of E_i is an edge when psi_i(S) is an edge of member i.
RealizeReport realize_with_report(const FittingFamily& f);
Hypergraph realize(const FittingFamily& f);

struct Window {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

enum class TracePolicy {
  reject,  // resample until every trace is inside the window
  prune,   // accept once |U| fits; report edges whose trace misses the window
};

struct SubsampleOptions {
  double p = 0.5;
  Window vertex_window{0.0, 1e300};
  Window trace_window{0.0, 1e300};
  std::uint64_t seed = 0;
  std::size_t max_retries = 1000;
  TracePolicy policy = TracePolicy::reject;
};

struct SubsampleResult {
  VertexSet kept;
  double p = 0.0;
  Window vertex_window;
  Window degree_window;  // the trace window
  std::size_t rejected_rounds = 0;
  // Prune policy only: ascending indices of base edges with an out-of-window
  // trace.
  std::vector<std::size_t> pruned_edges;
};

// Independent Bernoulli(p) vertex sample, round r drawn from the substream
// (seed, "subsample", r). Throws SamplingError after max_retries rejections.
SubsampleResult subsample_vertices(const Hypergraph& h, const SubsampleOptions& opts);

// Traces E cap U of the non-pruned edges, relabelled to [0, |U|). Traces with
// fewer than two vertices are dropped.
Hypergraph trace_hypergraph(const Hypergraph& h, const SubsampleResult& s);

}  // namespace omitlab
