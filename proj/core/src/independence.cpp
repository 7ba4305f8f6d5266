#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "omitlab/error.hpp"
#include "omitlab/oracles.hpp"

namespace omitlab {

namespace {

using Mask = std::uint64_t;

class IndependenceSearch {
 public:
  IndependenceSearch(const Hypergraph& h, std::uint64_t budget)
      : n_(h.vertex_count()), budget_(budget) {
    for (const auto& e : h.edges()) {
      Mask m = 0;
      for (Vertex v : e) m |= Mask{1} << v;
      edges_.push_back(m);
    }
    const auto deg = h.vertex_degrees();
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    seed_with_greedy(deg);
  }

  void run() {
    const Mask all = n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
    search(0, all);
  }

  std::size_t best_size() const { return static_cast<std::size_t>(std::popcount(best_)); }
  Mask best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void seed_with_greedy(const std::vector<std::size_t>& deg) {
    std::vector<Vertex> asc(order_.rbegin(), order_.rend());
    std::stable_sort(asc.begin(), asc.end(),
                     [&](Vertex a, Vertex b) { return deg[a] < deg[b]; });
    Mask chosen = 0;
    for (Vertex v : asc) {
      const Mask trial = chosen | (Mask{1} << v);
      bool ok = std::none_of(edges_.begin(), edges_.end(),
                             [&](Mask e) { return (e & ~trial) == 0; });
      if (ok) chosen = trial;
    }
    best_ = chosen;
  }

  void search(Mask in, Mask undecided) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("max_independent_set_exact: node budget of " +
                           std::to_string(budget_) + " exhausted");
    }
    std::vector<Mask> residues;
    bool changed = true;
    while (changed) {
      changed = false;
      residues.clear();
      for (Mask e : edges_) {
        if ((e & ~(in | undecided)) != 0) continue;  // holds an excluded vertex
        const Mask r = e & undecided;
        if (r == 0) return;  // edge fully inside the chosen set
        if (std::popcount(r) == 1) {
          undecided &= ~r;
          changed = true;
          break;
        }
        residues.push_back(r);
      }
    }
    // Vertices touching no live edge can always be added.
    Mask touched = 0;
    for (Mask r : residues) touched |= r;
    in |= undecided & ~touched;
    undecided &= touched;

    std::sort(residues.begin(), residues.end(), [](Mask a, Mask b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    Mask packed = 0;
    int forced_losses = 0;
    for (Mask r : residues) {
      if ((r & packed) == 0) {
        packed |= r;
        ++forced_losses;
      }
    }
    const int bound = std::popcount(in) + std::popcount(undecided) - forced_losses;
    if (bound <= std::popcount(best_)) return;
    if (undecided == 0) {
      best_ = in;
      return;
    }

    Vertex pick = order_.front();
    std::size_t pick_deg = 0;
    bool found = false;
    for (Vertex v : order_) {
      const Mask bit = Mask{1} << v;
      if (!(undecided & bit)) continue;
      std::size_t d = 0;
      for (Mask r : residues) d += (r & bit) != 0;
      if (!found || d > pick_deg) {
        pick = v;
        pick_deg = d;
        found = true;
      }
    }
    const Mask bit = Mask{1} << pick;
    search(in | bit, undecided & ~bit);
    search(in, undecided & ~bit);
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> edges_;
  std::vector<Vertex> order_;
  Mask best_ = 0;
};

}  // namespace

IndependenceResult max_independent_set_exact(const Hypergraph& h, std::uint64_t budget,
                                             std::size_t max_vertices) {
  const std::size_t limit = std::min<std::size_t>(max_vertices, 64);
  if (h.vertex_count() > limit) {
    throw InputError("max_independent_set_exact supports at most " + std::to_string(limit) +
                     " vertices, got " + std::to_string(h.vertex_count()));
  }
  IndependenceResult result;
  VertexSet set;
  if (h.vertex_count() > 0) {
    IndependenceSearch search(h, budget);
    search.run();
    result.nodes = search.nodes();
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
      if (search.best() & (Mask{1} << v)) set.push_back(static_cast<Vertex>(v));
  }
  result.alpha = set.size();
  result.witness.kind = WitnessKind::independent_set;
  result.witness.vertices = {std::move(set)};
  require_valid(result.witness, h);
  return result;
}

}  // namespace omitlab
