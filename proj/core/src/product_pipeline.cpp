#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "omitlab/error.hpp"
#include "omitlab/hypergraph_ops.hpp"
#include "omitlab/processes.hpp"
#include "omitlab/random.hpp"
#include "omitlab/regular_linear.hpp"

namespace omitlab {

namespace {

// Unions of G-edge pairs meeting in i vertices, 2 <= i <= k2-1: the spans of
// the (2,i)-cycle hypergraphs, shared by every column copy.
std::vector<Edge> cycle_spans(const Hypergraph& g, std::size_t k2) {
  std::vector<Edge> spans;
  for (std::size_t a = 0; a < g.edge_count(); ++a) {
    for (std::size_t b = a + 1; b < g.edge_count(); ++b) {
      const std::size_t i = sorted_intersection_size(g.edge(a), g.edge(b));
      if (i < 2 || i + 1 > k2) continue;
      Edge u;
      std::set_union(g.edge(a).begin(), g.edge(a).end(), g.edge(b).begin(), g.edge(b).end(),
                     std::back_inserter(u));
      spans.push_back(std::move(u));
    }
  }
  return spans;
}

}  // namespace

ProductResult product_pipeline(const Hypergraph& h, const Hypergraph& g,
                               const ProductOptions& options) {
  const std::size_t n = h.vertex_count();
  if (g.vertex_count() != n) {
    throw InputError("product_pipeline: H and G must share the vertex set");
  }
  const std::size_t k1 = require_uniform(h, "product_pipeline");
  const std::size_t k2 = require_uniform(g, "product_pipeline");
  const auto deg = h.vertex_degrees();
  const std::size_t delta = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());

  ProductResult r;
  r.degree = options.degree == 0 ? delta : options.degree;
  if (delta > r.degree) {
    throw InputError("product_pipeline: Delta(H) = " + std::to_string(delta) +
                     " exceeds D = " + std::to_string(r.degree));
  }
  if (options.width != 0) {
    r.width = options.width;
  } else if (k1 == 0) {
    r.width = 1;
  } else {
    r.width = (4 * r.degree / k1 + 1) * k1;
  }
  const std::size_t m = r.width;
  if (k1 != 0 && m % k1 != 0) {
    throw InputError("product_pipeline: k1 = " + std::to_string(k1) + " must divide m = " +
                     std::to_string(m));
  }

  // Regularizers F(v), one per distinct D_v (isomorphic copies serve every v
  // with the same deficit).
  std::vector<Hypergraph> family(n, Hypergraph(m));
  if (k1 != 0) {
    std::map<std::size_t, Hypergraph> by_deficit;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t dv = r.degree - deg[v];
      auto it = by_deficit.find(dv);
      if (it == by_deficit.end()) {
        it = by_deficit
                 .emplace(dv, regular_linear(m, k1, dv,
                                             derive_seed(options.seed,
                                                         {string_tag("regularizer"), dv})))
                 .first;
      }
      family[v] = it->second;
    }
  }
  const Hypergraph lifted = cartesian_product(h, family);

  const double nm = static_cast<double>(n) * static_cast<double>(m);
  if (r.degree == 0 || k1 < 2 || nm < 2.0) {
    r.p = 1.0;
  } else {
    r.p = std::min(1.0, options.c * std::pow(std::log(nm) / static_cast<double>(r.degree),
                                             1.0 / static_cast<double>(k1 - 1)));
  }
  r.target_steps = static_cast<std::size_t>(std::floor(r.p * nm));
  std::size_t steps = r.target_steps;
  if (steps > options.budget) {
    steps = static_cast<std::size_t>(options.budget);
    r.budget_exhausted = true;
  }
  const GreedyTrace trace =
      greedy_independent_set(lifted, derive_seed(options.seed, {string_tag("product")}), steps);
  r.greedy_steps = trace.i_max;
  r.shortfall = trace.i_max < r.target_steps && !r.budget_exhausted;

  // Column j holds the H-vertices v with (v, j) in the greedy set.
  std::vector<std::vector<char>> columns(m, std::vector<char>(n, 0));
  for (Vertex x : trace.independent_set) columns[x % m][x / m] = 1;

  std::uint64_t work = r.greedy_steps;
  const std::vector<Edge> spans = k2 >= 3 ? cycle_spans(g, k2) : std::vector<Edge>{};
  for (auto& col : columns) {
    for (const auto& s : spans) {
      if (++work > options.budget) {
        r.budget_exhausted = true;
        break;
      }
      if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return col[v] != 0; })) {
        col[s.front()] = 0;
        ++r.cycle_deletions;
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto size = static_cast<std::size_t>(std::count(columns[j].begin(), columns[j].end(), 1));
    if (j == 0 || size > best) {
      best = size;
      r.column = j;
    }
  }
  std::vector<char> chosen = m > 0 ? columns[r.column] : std::vector<char>(n, 0);
  r.column_size = best;

  // Degree-greedy: drop the vertex in the most G-edges inside the set.
  for (;;) {
    std::vector<std::size_t> inside_deg(n, 0);
    bool any = false;
    for (const auto& e : g.edges()) {
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return chosen[v] != 0; })) {
        any = true;
        for (Vertex v : e) ++inside_deg[v];
      }
    }
    if (!any) break;
    const auto worst = static_cast<std::size_t>(
        std::max_element(inside_deg.begin(), inside_deg.end()) - inside_deg.begin());
    chosen[worst] = 0;
    ++r.g_removals;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (chosen[v]) r.independent_set.push_back(static_cast<Vertex>(v));

  r.independent_in_h = h.is_independent(r.independent_set);
  r.independent_in_g = g.is_independent(r.independent_set);
  if (!r.independent_in_h || !r.independent_in_g) {
    throw VerificationError("product_pipeline: output is not independent in both H and G");
  }
  return r;
}

}  // namespace omitlab
