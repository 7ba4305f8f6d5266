#include <algorithm>
#include <limits>
#include <string>

#include "omitlab/error.hpp"
#include "omitlab/oracles.hpp"

namespace omitlab {

namespace {

// Maximum (target == 0) or target-size search for pairwise disjoint sets.
// Branches on the least covered vertex among live candidates: either one of
// the sets through it is taken, or the vertex is left uncovered.
class DisjointSearch {
 public:
  DisjointSearch(const std::vector<Edge>& sets, std::size_t target, std::uint64_t budget,
                 std::uint64_t& nodes)
      : sets_(sets), target_(target), budget_(budget), nodes_(nodes) {
    Vertex top = 0;
    for (const auto& s : sets) {
      if (!s.empty()) top = std::max(top, s.back());
      min_size_ = std::min(min_size_, std::max<std::size_t>(s.size(), 1));
    }
    freq_.assign(sets.empty() ? 0 : static_cast<std::size_t>(top) + 1, 0);
  }

  void run() {
    std::vector<std::size_t> live(sets_.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    std::vector<std::size_t> chosen;
    search(live, chosen);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  bool reached_target() const { return target_ != 0 && best_.size() >= target_; }

 private:
  bool done() const { return reached_target(); }

  void search(const std::vector<std::size_t>& live, std::vector<std::size_t>& chosen) {
    if (done()) return;
    if (++nodes_ > budget_) {
      throw BudgetExceeded("disjoint-set search: node budget of " + std::to_string(budget_) +
                           " exhausted");
    }
    if (chosen.size() > best_.size()) best_ = chosen;
    if (done() || live.empty()) return;

    std::size_t distinct = 0;
    for (std::size_t i : live)
      for (Vertex v : sets_[i])
        if (freq_[v]++ == 0) ++distinct;
    Vertex pivot = 0;
    std::size_t pivot_freq = std::numeric_limits<std::size_t>::max();
    for (std::size_t i : live) {
      for (Vertex v : sets_[i]) {
        if (freq_[v] < pivot_freq || (freq_[v] == pivot_freq && v < pivot)) {
          pivot = v;
          pivot_freq = freq_[v];
        }
      }
    }
    for (std::size_t i : live)
      for (Vertex v : sets_[i]) freq_[v] = 0;

    const std::size_t bound =
        chosen.size() + std::min(live.size(), distinct / min_size_);
    const std::size_t need = target_ != 0 ? target_ : best_.size() + 1;
    if (bound < need) return;

    std::vector<std::size_t> rest;
    for (std::size_t i : live) {
      const Edge& s = sets_[i];
      if (!std::binary_search(s.begin(), s.end(), pivot)) continue;
      rest.clear();
      for (std::size_t j : live) {
        if (j == i) continue;
        if (sorted_intersection_size(sets_[j], s) == 0) rest.push_back(j);
      }
      chosen.push_back(i);
      search(rest, chosen);
      chosen.pop_back();
      if (done()) return;
    }
    rest.clear();
    for (std::size_t j : live) {
      const Edge& s = sets_[j];
      if (!std::binary_search(s.begin(), s.end(), pivot)) rest.push_back(j);
    }
    search(rest, chosen);
  }

  const std::vector<Edge>& sets_;
  std::size_t target_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::size_t min_size_ = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> freq_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_disjoint_sets(const std::vector<Edge>& sets,
                                                           std::size_t target,
                                                           std::uint64_t budget,
                                                           std::uint64_t& nodes) {
  if (target == 0) return std::vector<std::size_t>{};
  if (sets.size() < target) return std::nullopt;
  DisjointSearch search(sets, target, budget, nodes);
  search.run();
  if (!search.reached_target()) return std::nullopt;
  auto out = search.best();
  out.resize(target);
  std::sort(out.begin(), out.end());
  return out;
}

MatchingResult matching_number_exact(const Hypergraph& h, std::uint64_t budget,
                                     std::size_t max_edges) {
  if (h.edge_count() > max_edges) {
    throw InputError("matching_number_exact supports at most " + std::to_string(max_edges) +
                     " edges, got " + std::to_string(h.edge_count()));
  }
  MatchingResult result;
  DisjointSearch search(h.edges(), 0, budget, result.nodes);
  search.run();
  auto chosen = search.best();
  std::sort(chosen.begin(), chosen.end());
  result.size = chosen.size();
  result.witness.kind = WitnessKind::matching;
  for (std::size_t i : chosen) {
    result.witness.edges.push_back(i);
    result.witness.edge_values.push_back(h.edge(i));
  }
  require_valid(result.witness, h);
  return result;
}

}  // namespace omitlab
