#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <unordered_map>

#include "omitlab/combinatorics.hpp"
#include "omitlab/detail/hash.hpp"
#include "omitlab/error.hpp"
#include "omitlab/processes.hpp"

namespace omitlab {

namespace {

std::unordered_map<Edge, std::size_t, detail::VectorHash> subset_degrees(const Hypergraph& g,
                                                                         std::size_t size) {
  std::unordered_map<Edge, std::size_t, detail::VectorHash> deg;
  for (const auto& e : g.edges()) {
    for_each_subset<Vertex>(e, size, [&](std::span<const Vertex> a) {
      ++deg[Edge(a.begin(), a.end())];
      return true;
    });
  }
  return deg;
}

// G_high = size-`size` sets of degree >= threshold; G_low = edges with no
// size-`size` subset in G_high.
std::pair<Hypergraph, Hypergraph> split_by_degree(const Hypergraph& g, std::size_t size,
                                                  double threshold) {
  const auto deg = subset_degrees(g, size);
  std::vector<Edge> high;
  for (const auto& [a, d] : deg)
    if (static_cast<double>(d) >= threshold) high.push_back(a);
  Hypergraph high_h(g.vertex_count(), std::move(high));
  std::vector<Edge> low;
  for (const auto& e : g.edges()) {
    const bool hit = !for_each_subset<Vertex>(e, size, [&](std::span<const Vertex> a) {
      return !high_h.contains_edge(a);
    });
    if (!hit) low.push_back(e);
  }
  return {std::move(high_h), Hypergraph(g.vertex_count(), std::move(low))};
}

}  // namespace

bool family_covers(const Hypergraph& h, const std::vector<DecompositionMember>& family) {
  for (const auto& e : h.edges()) {
    bool covered = false;
    for (const auto& m : family) {
      if (m.hypergraph.empty() || m.edge_size > e.size()) continue;
      covered = !for_each_subset<Vertex>(e, m.edge_size, [&](std::span<const Vertex> a) {
        return !m.hypergraph.contains_edge(a);
      });
      if (covered) break;
    }
    if (!covered) return false;
  }
  return true;
}

DecompositionResult decompose(const Hypergraph& h, std::size_t k0, std::size_t lambda,
                              std::uint64_t budget) {
  if (k0 < 2) throw InputError("decompose: k0 must be >= 2");
  if (lambda < 2) throw InputError("decompose: lambda must be >= 2");
  const std::size_t k = require_uniform(h, "decompose");
  if (!h.empty() && k < k0) {
    throw InputError("decompose: edge size " + std::to_string(k) + " below k0 = " +
                     std::to_string(k0));
  }
  DecompositionResult result;
  result.k = k;
  result.k0 = k0;
  result.lambda = lambda;

  std::deque<DecompositionMember> pending;
  pending.push_back({h, k, {"input"}});
  while (!pending.empty()) {
    DecompositionMember g = std::move(pending.front());
    pending.pop_front();
    const auto verdict = indecomposability_check(g.hypergraph, k0, lambda, k, budget);
    if (verdict.indecomposable) {
      result.family.push_back(std::move(g));
      continue;
    }
    ++result.splits;
    const std::size_t i0 = verdict.i0;
    const std::size_t kp = g.edge_size;
    const auto lam = decomposition_multiplicity(k, lambda, i0);
    auto [high, low] = split_by_degree(g.hypergraph, kp - i0, static_cast<double>(lam));
    const std::string tag = "split(k'=" + std::to_string(kp) + ",i0=" + std::to_string(i0) +
                            ",lambda_i0=" + std::to_string(lam) + ")";
    DecompositionMember hi{std::move(high), kp - i0, g.provenance};
    hi.provenance.push_back(tag + ":high");
    DecompositionMember lo{std::move(low), kp, g.provenance};
    lo.provenance.push_back(tag + ":low");
    pending.push_back(std::move(hi));
    pending.push_back(std::move(lo));
  }

  const std::size_t cap = k >= k0 ? (std::size_t{1} << std::min<std::size_t>(k - k0, 63)) : 1;
  if (result.family.size() > cap) {
    throw VerificationError("decompose: family of size " + std::to_string(result.family.size()) +
                            " exceeds 2^(k-k0) = " + std::to_string(cap));
  }
  for (const auto& m : result.family) {
    if (!indecomposability_check(m.hypergraph, k0, lambda, k, budget).indecomposable) {
      throw VerificationError("decompose: a member is still decomposable");
    }
  }
  if (!family_covers(h, result.family)) {
    throw VerificationError("decompose: an input edge contains no member edge");
  }
  return result;
}

double default_split_threshold(std::size_t n, std::size_t k, double beta) {
  if (n < 3 || k < 3) throw InputError("default_split_threshold: need n >= 3 and k >= 3");
  const double dn = static_cast<double>(n);
  return std::pow(dn, (static_cast<double>(k) - 3.0) / (static_cast<double>(k) - 1.0)) /
         std::pow(std::log(dn), beta);
}

DegreeSplit degree_split(const Hypergraph& h, std::optional<double> threshold) {
  const std::size_t k = require_uniform(h, "degree_split");
  if (!h.empty() && k < 3) throw InputError("degree_split: k must be >= 3");
  DegreeSplit s;
  if (h.empty()) {
    s.high = Hypergraph(h.vertex_count());
    s.low = h;
    s.threshold = threshold.value_or(0.0);
    return s;
  }
  s.threshold = threshold ? *threshold : default_split_threshold(h.vertex_count(), k);
  if (!(s.threshold > 0.0)) throw InputError("degree_split: threshold must be positive");
  auto [high, low] = split_by_degree(h, k - 1, s.threshold);
  s.high = std::move(high);
  s.low = std::move(low);
  return s;
}

}  // namespace omitlab
