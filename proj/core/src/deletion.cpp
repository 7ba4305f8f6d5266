#include <algorithm>
#include <cmath>
#include <string>

#include "omitlab/detail/parallel.hpp"
#include "omitlab/error.hpp"
#include "omitlab/processes.hpp"
#include "omitlab/random.hpp"

namespace omitlab {

double deletion_probability(std::size_t n, std::size_t l, double delta) {
  if (n == 0 || l < 1) throw InputError("deletion_probability: need n >= 1 and l >= 1");
  const double dl = static_cast<double>(l);
  const double p = delta * std::pow(static_cast<double>(n), -(2.0 * dl - 2.0) / (3.0 * dl - 1.0));
  return std::min(1.0, p);
}

DeletionResult deletion_lower_bound(const std::vector<Hypergraph>& family, double p,
                                    std::size_t trials, std::uint64_t seed, std::size_t jobs) {
  if (!(p > 0.0 && p <= 1.0)) throw InputError("deletion_lower_bound: p must lie in (0, 1]");
  if (family.empty()) throw InputError("deletion_lower_bound: empty family");
  const std::size_t n = family.front().vertex_count();
  for (const auto& m : family) {
    if (m.vertex_count() != n) {
      throw InputError("deletion_lower_bound: members must share one vertex set");
    }
  }
  struct Trial {
    VertexSet repaired;
    std::size_t sampled = 0;
    std::size_t surviving = 0;
  };
  std::vector<Trial> out(trials);
  detail::parallel_for(trials, jobs, [&](std::size_t t) {
    Rng rng = make_rng(seed, {string_tag("deletion"), t});
    std::vector<char> in(n, 0);
    Trial& tr = out[t];
    for (std::size_t v = 0; v < n; ++v) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) {
        in[v] = 1;
        ++tr.sampled;
      }
    }
    auto inside = [&](const Edge& e) {
      return std::all_of(e.begin(), e.end(), [&](Vertex x) { return in[x] != 0; });
    };
    for (const auto& m : family)
      for (const auto& e : m.edges()) tr.surviving += inside(e);
    for (const auto& m : family)
      for (const auto& e : m.edges())
        if (inside(e)) in[e.front()] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (in[v]) tr.repaired.push_back(static_cast<Vertex>(v));
    for (const auto& m : family) {
      if (!m.is_independent(tr.repaired)) {
        throw VerificationError("deletion_lower_bound: repaired set is not independent");
      }
    }
  });

  DeletionResult r;
  r.trials = trials;
  if (trials == 0) return r;
  double s = 0, sv = 0, est = 0, rep = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    s += static_cast<double>(out[t].sampled);
    sv += static_cast<double>(out[t].surviving);
    est += static_cast<double>(out[t].sampled) - static_cast<double>(out[t].surviving);
    rep += static_cast<double>(out[t].repaired.size());
    if (t == 0 || out[t].repaired.size() > r.best.size()) {
      r.best = out[t].repaired;
      r.best_trial = t;
    }
  }
  const double dt = static_cast<double>(trials);
  r.mean_sampled = s / dt;
  r.mean_surviving = sv / dt;
  r.mean_estimate = est / dt;
  r.mean_repaired = rep / dt;
  return r;
}

std::vector<double> decomposition_lambdas(std::size_t k, std::size_t lambda) {
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 <= k; ++i) {
    out.push_back(std::pow(static_cast<double>(k) * static_cast<double>(lambda),
                           std::ldexp(1.0, static_cast<int>(i) - 1)));
  }
  return out;
}

double matching_floor(std::size_t m, const std::vector<double>& lambdas) {
  double denom = 1.0;
  for (std::size_t i = 1; i <= lambdas.size(); ++i)
    denom *= static_cast<double>(i + 1) * lambdas[i - 1];
  return static_cast<double>(m) / denom;
}

GreedyMatching greedy_matching(const Hypergraph& h,
                               const std::optional<std::vector<double>>& lambdas) {
  GreedyMatching g;
  std::vector<char> used(h.vertex_count(), 0);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[v] != 0; })) continue;
    for (Vertex v : e) used[v] = 1;
    g.edges.push_back(i);
  }
  if (lambdas) {
    const std::size_t k = require_uniform(h, "greedy_matching");
    if (!h.empty() && lambdas->size() != k - 1) {
      throw InputError("greedy_matching: need k-1 = " + std::to_string(k - 1) + " lambdas");
    }
    g.floor = matching_floor(h.edge_count(), *lambdas);
  }
  return g;
}

}  // namespace omitlab
