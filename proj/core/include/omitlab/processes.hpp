#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omitlab/hypergraph.hpp"
#include "omitlab/oracles.hpp"

namespace omitlab {

// ---- random greedy independent set -------------------------------------

struct GreedyStep {
  std::size_t index = 0;
  Vertex vertex = 0;
  std::size_t live_vertices = 0;  // |V(i)| before the step
  std::size_t live_edges = 0;     // |H(i)| before the step
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  VertexSet independent_set;  // ascending
  std::size_t i_max = 0;      // number of steps taken
  bool completed = false;     // V became empty (no stop_at truncation)
};

// Runs the two-rule process: v leaves V along with every u such that {u,v}
// is a current edge; edges through such u are removed; v is stripped from the
// remaining edges through it. Shrunken duplicates collapse. The final set is
// checked independent, and maximal when the run completes (VerificationError
// otherwise).
GreedyTrace greedy_independent_set(const Hypergraph& h, std::uint64_t seed,
                                   std::optional<std::size_t> stop_at = std::nullopt);

struct ContainmentEstimate {
  std::size_t trials = 0;
  std::size_t step = 0;
  double mean = 0.0;
  double standard_error = 0.0;
  double benchmark = 0.0;  // (i/n)^{k'} |G|
  std::size_t min_reached_step = 0;
};

// Monte Carlo estimate of E|G[I(i)]|; trial t uses the substream
// (seed, "probe", t) so results do not depend on `jobs`.
ContainmentEstimate containment_probe(const Hypergraph& h, const Hypergraph& g,
                                      std::size_t step, std::size_t trials,
                                      std::uint64_t seed, std::size_t jobs = 1);

// ---- decomposition ------------------------------------------------------

struct DecompositionMember {
  Hypergraph hypergraph;
  std::size_t edge_size = 0;
  std::vector<std::string> provenance;  // split decisions from the input
};

struct DecompositionResult {
  std::vector<DecompositionMember> family;
  std::size_t k = 0;
  std::size_t k0 = 0;
  std::size_t lambda = 0;
  std::size_t splits = 0;
};

// Splits until every member is k0-indecomposable, using lambda_i from the
// input's edge size. Verifies the family-size bound, indecomposability of every
// member and edge containment before returning (VerificationError otherwise).
DecompositionResult decompose(const Hypergraph& h, std::size_t k0, std::size_t lambda,
                              std::uint64_t budget = kDefaultOracleBudget);

// True iff every edge of `h` contains an edge of some member.
bool family_covers(const Hypergraph& h, const std::vector<DecompositionMember>& family);

struct DegreeSplit {
  Hypergraph high;  // (k-1)-sets of the shadow with degree >= threshold
  Hypergraph low;   // edges with no (k-1)-subset in `high`
  double threshold = 0.0;
};

// n^{(k-3)/(k-1)} / (log n)^{beta}.
double default_split_threshold(std::size_t n, std::size_t k, double beta = 0.8);
DegreeSplit degree_split(const Hypergraph& h, std::optional<double> threshold = std::nullopt);

// ---- deletion and matchings --------------------------------------------

struct DeletionResult {
  VertexSet best;
  std::size_t best_trial = 0;
  std::size_t trials = 0;
  double mean_sampled = 0.0;    // E|I|
  double mean_surviving = 0.0;  // E sum |H_i[I]|
  double mean_estimate = 0.0;   // E(|I| - sum |H_i[I]|)
  double mean_repaired = 0.0;   // realized size after repair
};

// delta n^{-(2l-2)/(3l-1)}, capped at 1.
double deletion_probability(std::size_t n, std::size_t l, double delta = 0.5);

// Samples I with probability p per vertex, then drops the lowest vertex of
// every edge of every member still inside I. Trial t uses (seed, "deletion", t).
DeletionResult deletion_lower_bound(const std::vector<Hypergraph>& family, double p,
                                    std::size_t trials, std::uint64_t seed,
                                    std::size_t jobs = 1);

struct GreedyMatching {
  std::vector<std::size_t> edges;  // indices, ascending
  std::optional<double> floor;     // m / prod (i+1) lambda_i, when requested
};

// m / prod_{i=1}^{k-1} (i+1) lambda_i, lambdas[i-1] = lambda_i. Holds as a
// lower bound on nu(H) for {S_{lambda_1}(k-1), ..., S_{lambda_{k-1}}(1)}-free H.
double matching_floor(std::size_t m, const std::vector<double>& lambdas);

// lambda_i = (k lambda)^{2^{i-1}} for i = 1..k-1, as doubles.
std::vector<double> decomposition_lambdas(std::size_t k, std::size_t lambda);

// First-fit maximal matching over the canonical edge order; the floor is
// attached when `lambdas` (k-1 values) are given.
GreedyMatching greedy_matching(const Hypergraph& h,
                               const std::optional<std::vector<double>>& lambdas = std::nullopt);

// ---- product pipeline ---------------------------------------------------

struct ProductOptions {
  std::size_t degree = 0;  // D; 0 means Delta(H)
  std::size_t width = 0;   // m; 0 means the smallest multiple of k1 above 4D
  double c = 0.5;
  std::uint64_t seed = 0;
  std::uint64_t budget = 5'000'000;  // cap on greedy steps plus repair work
};

struct ProductResult {
  VertexSet independent_set;
  std::size_t width = 0;
  std::size_t degree = 0;
  double p = 0.0;
  std::size_t target_steps = 0;  // floor(p n m)
  std::size_t greedy_steps = 0;
  bool shortfall = false;        // greedy ended before target_steps
  bool budget_exhausted = false;
  std::size_t cycle_deletions = 0;
  std::size_t column = 0;
  std::size_t column_size = 0;
  std::size_t g_removals = 0;
  bool independent_in_h = false;
  bool independent_in_g = false;
};

ProductResult product_pipeline(const Hypergraph& h, const Hypergraph& g,
                               const ProductOptions& options);

}  // namespace omitlab
