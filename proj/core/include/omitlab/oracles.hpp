#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "omitlab/hypergraph.hpp"
#include "omitlab/witness.hpp"

namespace omitlab {

// Budgets count search-node expansions, never wall-clock time, so every
// answer is reproducible. Exhaustion throws BudgetExceeded.
inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

struct IndependenceResult {
  std::size_t alpha = 0;
  Witness witness;  // kind independent_set, re-validated
  std::uint64_t nodes = 0;
};

// Exact alpha(H) by branch and bound on include/exclude decisions, with
// forced exclusions (an edge with one undecided vertex left) and an upper
// bound from a greedy packing of disjoint undecided edge residues.
IndependenceResult max_independent_set_exact(const Hypergraph& h,
                                             std::uint64_t budget = kDefaultOracleBudget,
                                             std::size_t max_vertices = 64);

struct MatchingResult {
  std::size_t size = 0;
  Witness witness;  // kind matching
  std::uint64_t nodes = 0;
};

MatchingResult matching_number_exact(const Hypergraph& h,
                                     std::uint64_t budget = kDefaultOracleBudget,
                                     std::size_t max_edges = 5000);

// Searches `sets` (sorted vertex lists) for `target` pairwise disjoint members
// and returns their indices. `nodes` accumulates expansions; the search throws
// BudgetExceeded once it passes `budget`.
std::optional<std::vector<std::size_t>> find_disjoint_sets(const std::vector<Edge>& sets,
                                                           std::size_t target,
                                                           std::uint64_t budget,
                                                           std::uint64_t& nodes);

// A copy of S_petals(core_size): `petals` edges whose pairwise intersections
// all equal one core_size-set. Candidate cores are core_size-subsets of edges;
// for each, the residues E \ S of edges through S are searched for `petals`
// pairwise disjoint members.
std::optional<Witness> contains_sunflower(const Hypergraph& h, std::size_t core_size,
                                          std::size_t petals,
                                          std::uint64_t budget = kDefaultOracleBudget);

// Two edges meeting in exactly l vertices, or nullopt. Returns the pair with
// the smallest (first index, second index).
std::optional<Witness> omitting_check(const Hypergraph& h, std::size_t l);

// A copy of the k-Fan (k = edge size, k >= 2): k edges through an apex v
// pairwise meeting only in v, plus an edge avoiding v that meets each of them
// in exactly one vertex.
std::optional<Witness> contains_fan(const Hypergraph& h,
                                    std::uint64_t budget = kDefaultOracleBudget);

// lambda_i = (k lambda)^{2^{i-1}}, saturating at UINT64_MAX.
std::uint64_t decomposition_multiplicity(std::size_t k, std::size_t lambda, std::size_t i);

struct IndecomposabilityVerdict {
  bool indecomposable = true;
  std::size_t i0 = 0;  // smallest offending i when decomposable
  std::optional<Witness> witness;
};

// A k'-uniform H is k0-indecomposable if k' == k0 or it contains no
// S_{lambda_i}(k' - i) for 1 <= i <= k' - k0, with lambda_i taken from
// `reference_k` (the original input's edge size; 0 means k').
IndecomposabilityVerdict indecomposability_check(const Hypergraph& h, std::size_t k0,
                                                 std::size_t lambda,
                                                 std::size_t reference_k = 0,
                                                 std::uint64_t budget = kDefaultOracleBudget);

struct DlrCycleCondition {
  std::size_t j = 0;
  std::size_t count = 0;  // C_H(2, j)
  double bound = 0.0;     // n t^{2k-j-1-eps}
  double margin = 0.0;    // bound - count
  bool ok = true;
};

struct DlrAudit {
  std::size_t n = 0;
  std::size_t k = 0;
  double t = 0.0;
  double epsilon = 0.0;
  bool t_instantiated = false;  // t derived from (lambda, l)
  std::size_t max_degree = 0;
  double degree_bound = 0.0;  // t^{k-1}
  double degree_margin = 0.0;
  bool degree_ok = true;
  std::vector<DlrCycleCondition> cycles;  // j = 2..k-1
  bool all_ok = true;
};

// Checks the uncrowded-hypergraph hypotheses: Delta(H) <= t^{k-1} and
// C_H(2, j) <= n t^{2k-j-1-eps} for 2 <= j <= k-1. Reports margins only; it
// never claims the resulting independence bound.
DlrAudit dlr_audit(const Hypergraph& h, double t, double epsilon);

// t = lambda^{1/(k-1)} n^{(l-1)/(k-1)}.
double dlr_instantiated_t(std::size_t n, std::size_t k, double lambda, std::size_t l);
DlrAudit dlr_audit_instantiated(const Hypergraph& h, double lambda, std::size_t l,
                                double epsilon);

}  // namespace omitlab
