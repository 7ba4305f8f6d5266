#include <algorithm>
#include <string>

#include "omitlab/error.hpp"
#include "omitlab/oracles.hpp"

namespace omitlab {

namespace {

class FanSearch {
 public:
  FanSearch(const Hypergraph& h, std::uint64_t budget)
      : h_(h), budget_(budget), inc_(h.incidence()), used_(h.vertex_count(), 0) {}

  std::optional<Witness> run(std::size_t k) {
    for (Vertex v = 0; v < h_.vertex_count(); ++v) {
      const auto& star = inc_[v];
      if (star.size() < k) continue;
      for (std::size_t cross = 0; cross < h_.edge_count(); ++cross) {
        const Edge& e = h_.edge(cross);
        if (std::binary_search(e.begin(), e.end(), v)) continue;
        auto found = petals_for(v, e, star);
        if (!found) continue;
        Witness w;
        w.kind = WitnessKind::fan;
        w.vertices = {{v}};
        for (std::size_t idx : *found) {
          w.edges.push_back(idx);
          w.edge_values.push_back(h_.edge(idx));
        }
        w.edges.push_back(cross);
        w.edge_values.push_back(e);
        require_valid(w, h_);
        return w;
      }
    }
    return std::nullopt;
  }

 private:
  // For each u in the crossing edge, the edges through the apex meeting the
  // crossing edge exactly in {u}; then a choice of one per u with pairwise
  // disjoint residues outside the apex.
  std::optional<std::vector<std::size_t>> petals_for(Vertex apex, const Edge& cross,
                                                     const std::vector<std::size_t>& star) {
    std::vector<std::vector<std::size_t>> options(cross.size());
    for (std::size_t idx : star) {
      const Edge& f = h_.edge(idx);
      if (sorted_intersection_size(f, cross) != 1) continue;
      for (std::size_t j = 0; j < cross.size(); ++j) {
        if (std::binary_search(f.begin(), f.end(), cross[j])) {
          options[j].push_back(idx);
          break;
        }
      }
    }
    for (const auto& o : options)
      if (o.empty()) return std::nullopt;
    std::vector<std::size_t> order(cross.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return options[a].size() < options[b].size();
    });
    std::vector<std::size_t> pick(cross.size());
    if (!assign(apex, options, order, 0, pick)) return std::nullopt;
    return pick;
  }

  bool assign(Vertex apex, const std::vector<std::vector<std::size_t>>& options,
              const std::vector<std::size_t>& order, std::size_t depth,
              std::vector<std::size_t>& pick) {
    if (depth == order.size()) return true;
    if (++nodes_ > budget_) {
      throw BudgetExceeded("contains_fan: node budget of " + std::to_string(budget_) +
                           " exhausted");
    }
    const std::size_t slot = order[depth];
    for (std::size_t idx : options[slot]) {
      const Edge& f = h_.edge(idx);
      bool clash = false;
      for (Vertex x : f)
        if (x != apex && used_[x]) clash = true;
      if (clash) continue;
      for (Vertex x : f)
        if (x != apex) used_[x] = 1;
      pick[slot] = idx;
      const bool ok = assign(apex, options, order, depth + 1, pick);
      for (Vertex x : f)
        if (x != apex) used_[x] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Hypergraph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> inc_;
  std::vector<char> used_;
};

}  // namespace

std::optional<Witness> contains_fan(const Hypergraph& h, std::uint64_t budget) {
  if (h.empty()) return std::nullopt;
  const std::size_t k = require_uniform(h, "contains_fan");
  FanSearch search(h, budget);
  return search.run(k);
}

}  // namespace omitlab
