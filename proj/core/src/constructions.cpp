#include "omitlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "omitlab/combinatorics.hpp"
#include "omitlab/error.hpp"
#include "omitlab/random.hpp"

namespace omitlab {

namespace {

Edge random_subset(std::size_t n, std::size_t k, Rng& rng) {
  // Floyd's sampling: k draws, no rejection loop.
  std::set<Vertex> chosen;
  for (std::size_t j = n - k; j < n; ++j) {
    std::uniform_int_distribution<std::size_t> pick(0, j);
    const auto t = static_cast<Vertex>(pick(rng));
    if (!chosen.insert(t).second) chosen.insert(static_cast<Vertex>(j));
  }
  return Edge(chosen.begin(), chosen.end());
}

}  // namespace

Hypergraph sunflower(std::size_t k, std::size_t l, std::size_t lambda) {
  if (l < 1 || l >= k) {
    throw InputError("sunflower: need 1 <= l < k (k=" + std::to_string(k) +
                     ", l=" + std::to_string(l) + ")");
  }
  if (lambda < 1) throw InputError("sunflower: lambda must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lambda; ++i) {
    Edge e(l);
    std::iota(e.begin(), e.end(), Vertex{0});
    for (std::size_t j = 0; j < k - l; ++j) e.push_back(static_cast<Vertex>(l + i * (k - l) + j));
    edges.push_back(std::move(e));
  }
  return Hypergraph(l + lambda * (k - l), std::move(edges));
}

Hypergraph fan(std::size_t k) {
  if (k < 2) throw InputError("fan: k must be >= 2");
  std::vector<Edge> edges;
  Edge cross;
  for (std::size_t i = 0; i < k; ++i) {
    Edge e{0};
    const std::size_t first = 1 + i * (k - 1);
    for (std::size_t j = 0; j < k - 1; ++j) e.push_back(static_cast<Vertex>(first + j));
    cross.push_back(static_cast<Vertex>(first));
    edges.push_back(std::move(e));
  }
  edges.push_back(std::move(cross));
  return Hypergraph(k * (k - 1) + 1, std::move(edges));
}

Hypergraph l_construction(std::size_t m, std::size_t n, std::size_t k) {
  if (k < 3) throw InputError("l_construction: k must be >= 3");
  std::vector<Edge> edges;
  if (m >= k - 1 && n >= 2) {
    std::vector<Vertex> xs(m);
    std::iota(xs.begin(), xs.end(), Vertex{0});
    for_each_subset<Vertex>(xs, k - 1, [&](std::span<const Vertex> chain) {
      for (std::size_t y2 = 0; y2 < n; ++y2) {
        for (std::size_t y1 = y2 + 1; y1 < n; ++y1) {
          Edge e;
          e.push_back(static_cast<Vertex>(chain[0] * n + y1));
          for (Vertex x : chain) e.push_back(static_cast<Vertex>(x * n + y2));
          edges.push_back(std::move(e));
        }
      }
      return true;
    });
  }
  return Hypergraph(m * n, std::move(edges));
}

std::pair<std::size_t, std::size_t> ramsey_fan_parameters(std::size_t t, std::size_t k) {
  if (k < 3 || t < k) throw InputError("ramsey-fan parameters need t >= k >= 3");
  return {t / 2, (t - 1) / (2 * (k - 2))};
}

Hypergraph perfect_matching(std::size_t n, std::size_t k) {
  if (k < 2 || n % k != 0) throw InputError("perfect_matching: need k >= 2 and k | n");
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < n; b += k) {
    Edge e(k);
    std::iota(e.begin(), e.end(), static_cast<Vertex>(b));
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph complete_hypergraph(std::size_t n, std::size_t k) {
  if (k < 2) throw InputError("complete_hypergraph: k must be >= 2");
  return Hypergraph(n, all_subsets(n, k));
}

Hypergraph incidence_hypergraph(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.left_count());
  for (std::size_t v = 0; v < g.left_count(); ++v) {
    const auto nb = g.neighbors(v);
    if (nb.size() < 2) {
      throw InputError("incidence_hypergraph: left vertex " + std::to_string(v) +
                       " has degree " + std::to_string(nb.size()) + " < 2");
    }
    edges.emplace_back(nb.begin(), nb.end());
  }
  return Hypergraph(g.right_count(), std::move(edges));
}

Hypergraph random_uniform(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed) {
  if (k < 2 || k > n) throw InputError("random_uniform: need 2 <= k <= n");
  const std::uint64_t total = binomial(n, k);
  if (m > total) m = static_cast<std::size_t>(total);
  Rng rng = make_rng(seed, {string_tag("random_uniform")});
  std::set<Edge> edges;
  while (edges.size() < m) edges.insert(random_subset(n, k, rng));
  return Hypergraph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Hypergraph random_omitting_system(std::size_t n, std::size_t k, std::size_t l,
                                  std::size_t attempts, std::uint64_t seed) {
  if (k < 2 || k > n) throw InputError("random_omitting_system: need 2 <= k <= n");
  if (l >= k) throw InputError("random_omitting_system: need l < k");
  Rng rng = make_rng(seed, {string_tag("random_omitting_system")});
  std::vector<Edge> kept;
  std::set<Edge> seen;
  for (std::size_t a = 0; a < attempts; ++a) {
    Edge e = random_subset(n, k, rng);
    if (!seen.insert(e).second) continue;
    const bool ok = std::none_of(kept.begin(), kept.end(), [&](const Edge& f) {
      return sorted_intersection_size(e, f) == l;
    });
    if (ok) kept.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(kept));
}

Hypergraph sunflower_union(std::size_t n, std::size_t k,
                           const std::vector<SunflowerPlacement>& placements,
                           std::uint64_t seed) {
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < placements.size(); ++p) {
    const auto& pl = placements[p];
    const Hypergraph s = sunflower(k, pl.core_size, pl.petals);
    if (s.vertex_count() > n) {
      throw InputError("sunflower_union: placement " + std::to_string(p) + " needs " +
                       std::to_string(s.vertex_count()) + " vertices, only " +
                       std::to_string(n) + " available");
    }
    Rng rng = make_rng(seed, {string_tag("sunflower_union"), p});
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), Vertex{0});
    std::shuffle(image.begin(), image.end(), rng);
    for (const auto& e : s.edges()) {
      Edge mapped;
      for (Vertex v : e) mapped.push_back(image[v]);
      std::sort(mapped.begin(), mapped.end());
      edges.push_back(std::move(mapped));
    }
  }
  return Hypergraph(n, std::move(edges));
}

Rational p_tau(std::size_t m, std::size_t l, std::size_t tau) {
  if (tau < l + 1 || tau > m) {
    throw InputError("p_tau: need l+1 <= tau <= m (m=" + std::to_string(m) +
                     ", l=" + std::to_string(l) + ", tau=" + std::to_string(tau) + ")");
  }
  using boost::multiprecision::cpp_int;
  auto choose = [](std::size_t a, std::size_t b) {
    cpp_int r = 1;
    for (std::size_t i = 1; i <= b; ++i) {
      r *= a - b + i;
      r /= i;
    }
    return r;
  };
  return Rational(choose(m - l - 1, tau - l - 1), choose(m, tau));
}

std::size_t default_tau(std::size_t n, std::size_t l, double constant) {
  if (l < 1 || n < 2) throw InputError("default_tau: need l >= 1 and n >= 2");
  return static_cast<std::size_t>(
      std::ceil(constant * std::pow(std::log(static_cast<double>(n)), 1.0 / static_cast<double>(l))));
}

}  // namespace omitlab
