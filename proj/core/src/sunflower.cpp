#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "omitlab/combinatorics.hpp"
#include "omitlab/detail/hash.hpp"
#include "omitlab/error.hpp"
#include "omitlab/oracles.hpp"

namespace omitlab {

namespace {

Witness sunflower_witness(const Hypergraph& h, const Edge& core,
                          const std::vector<std::size_t>& edge_ids) {
  Witness w;
  w.kind = WitnessKind::sunflower;
  w.vertices = {core};
  for (std::size_t i : edge_ids) {
    w.edges.push_back(i);
    w.edge_values.push_back(h.edge(i));
  }
  require_valid(w, h);
  return w;
}

// Budget on the sum of C(|E|, l) before bucketing by l-subsets is abandoned
// in favour of a plain pairwise scan.
constexpr std::uint64_t kBucketLimit = 40'000'000;

}  // namespace

std::optional<Witness> contains_sunflower(const Hypergraph& h, std::size_t core_size,
                                          std::size_t petals, std::uint64_t budget) {
  if (petals == 0) throw InputError("contains_sunflower: petals must be >= 1");
  if (h.empty()) return std::nullopt;
  if (petals > h.edge_count()) return std::nullopt;

  // Ordered map so cores are tried lexicographically.
  std::map<Edge, std::vector<std::size_t>> through;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    if (e.size() <= core_size) continue;
    for_each_subset<Vertex>(e, core_size, [&](std::span<const Vertex> s) {
      through[Edge(s.begin(), s.end())].push_back(i);
      return true;
    });
  }
  std::uint64_t nodes = 0;
  for (const auto& [core, ids] : through) {
    if (ids.size() < petals) continue;
    std::vector<Edge> residues;
    residues.reserve(ids.size());
    for (std::size_t i : ids) residues.push_back(sorted_difference(h.edge(i), core));
    auto found = find_disjoint_sets(residues, petals, budget, nodes);
    if (!found) continue;
    std::vector<std::size_t> edge_ids;
    for (std::size_t r : *found) edge_ids.push_back(ids[r]);
    return sunflower_witness(h, core, edge_ids);
  }
  return std::nullopt;
}

std::optional<Witness> omitting_check(const Hypergraph& h, std::size_t l) {
  const std::size_t m = h.edge_count();
  std::optional<std::pair<std::size_t, std::size_t>> best;
  auto consider = [&](std::size_t a, std::size_t b) {
    if (!best || std::make_pair(a, b) < *best) best = std::make_pair(a, b);
  };

  std::uint64_t subset_total = 0;
  for (const auto& e : h.edges())
    subset_total = std::min(kSaturated - 1, subset_total + binomial(e.size(), l));

  if (l == 0 || subset_total > kBucketLimit) {
    for (std::size_t a = 0; a < m && !best; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (h.intersection_size(a, b) == l) {
          consider(a, b);
          break;
        }
  } else {
    // Any pair meeting in exactly l vertices shares an l-subset, so only
    // pairs within one bucket need an exact intersection test.
    std::unordered_map<Edge, std::vector<std::size_t>, detail::VectorHash> buckets;
    for (std::size_t i = 0; i < m; ++i) {
      for_each_subset<Vertex>(h.edge(i), l, [&](std::span<const Vertex> s) {
        buckets[Edge(s.begin(), s.end())].push_back(i);
        return true;
      });
    }
    for (const auto& [key, ids] : buckets) {
      for (std::size_t x = 0; x < ids.size(); ++x) {
        if (best && ids[x] > best->first) break;
        for (std::size_t y = x + 1; y < ids.size(); ++y) {
          if (best && std::make_pair(ids[x], ids[y]) >= *best) break;
          if (h.intersection_size(ids[x], ids[y]) == l) {
            consider(ids[x], ids[y]);
            break;
          }
        }
      }
    }
  }
  if (!best) return std::nullopt;
  Witness w;
  w.kind = WitnessKind::omitting_pair;
  const Edge& ea = h.edge(best->first);
  const Edge& eb = h.edge(best->second);
  Edge common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                        std::back_inserter(common));
  w.vertices = {common};
  w.edges = {best->first, best->second};
  w.edge_values = {ea, eb};
  require_valid(w, h);
  return w;
}

std::uint64_t decomposition_multiplicity(std::size_t k, std::size_t lambda, std::size_t i) {
  if (i == 0) throw InputError("decomposition_multiplicity: i must be >= 1");
  std::uint64_t value = saturating_mul(k, lambda);
  for (std::size_t step = 1; step < i && value != kSaturated; ++step)
    value = saturating_mul(value, value);
  return value;
}

IndecomposabilityVerdict indecomposability_check(const Hypergraph& h, std::size_t k0,
                                                 std::size_t lambda, std::size_t reference_k,
                                                 std::uint64_t budget) {
  IndecomposabilityVerdict verdict;
  if (h.empty()) return verdict;
  const std::size_t kp = require_uniform(h, "indecomposability_check");
  if (kp < k0) {
    throw InputError("indecomposability_check: edge size " + std::to_string(kp) +
                     " below k0 = " + std::to_string(k0));
  }
  const std::size_t k = reference_k == 0 ? kp : reference_k;
  for (std::size_t i = 1; i + k0 <= kp; ++i) {
    const std::uint64_t lam = decomposition_multiplicity(k, lambda, i);
    if (lam > h.edge_count()) continue;
    auto w = contains_sunflower(h, kp - i, static_cast<std::size_t>(lam), budget);
    if (w) {
      verdict.indecomposable = false;
      verdict.i0 = i;
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace omitlab
