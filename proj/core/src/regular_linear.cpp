#include "omitlab/regular_linear.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "omitlab/error.hpp"
#include "omitlab/hypergraph_ops.hpp"
#include "omitlab/random.hpp"

namespace omitlab {

namespace {

class Packer {
 public:
  Packer(std::size_t n, std::size_t k) : n_(n), k_(k), covered_(n * n, 0) {}

  void add_block_pairs(std::span<const Vertex> block) {
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        covered_[block[a] * n_ + block[b]] = 1;
        covered_[block[b] * n_ + block[a]] = 1;
      }
  }

  int block_cost(const std::vector<Vertex>& perm, std::size_t block) const {
    int cost = 0;
    const std::size_t base = block * k_;
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t b = a + 1; b < k_; ++b)
        cost += covered_[perm[base + a] * n_ + perm[base + b]];
    return cost;
  }

  // Tries to turn `perm` into a placement with zero covered pairs.
  bool repair(std::vector<Vertex>& perm, Rng& rng, std::size_t max_swaps) const {
    const std::size_t blocks = n_ / k_;
    std::vector<int> cost(blocks);
    int total = 0;
    for (std::size_t b = 0; b < blocks; ++b) total += cost[b] = block_cost(perm, b);
    std::uniform_int_distribution<std::size_t> any_pos(0, n_ - 1);
    std::vector<std::size_t> bad;
    for (std::size_t s = 0; s < max_swaps && total > 0; ++s) {
      bad.clear();
      for (std::size_t b = 0; b < blocks; ++b)
        if (cost[b] > 0) bad.push_back(b);
      std::uniform_int_distribution<std::size_t> pick_bad(0, bad.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_off(0, k_ - 1);
      const std::size_t pa = bad[pick_bad(rng)] * k_ + pick_off(rng);
      const std::size_t pb = any_pos(rng);
      const std::size_t ba = pa / k_, bb = pb / k_;
      if (ba == bb) continue;
      const int before = cost[ba] + cost[bb];
      std::swap(perm[pa], perm[pb]);
      const int ca = block_cost(perm, ba), cb = block_cost(perm, bb);
      if (ca + cb <= before) {
        cost[ba] = ca;
        cost[bb] = cb;
        total += ca + cb - before;
      } else {
        std::swap(perm[pa], perm[pb]);
      }
    }
    return total == 0;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<char> covered_;
};

void verify_regular_linear(const Hypergraph& h, std::size_t d) {
  for (std::size_t deg : h.vertex_degrees()) {
    if (deg != d) throw VerificationError("regular_linear: output is not regular");
  }
  if (h.edge_count() > 0 && !cycle_census(h).is_linear) {
    throw VerificationError("regular_linear: output is not linear");
  }
}

}  // namespace

Hypergraph regular_linear(std::size_t n, std::size_t k, std::size_t d, std::uint64_t seed,
                          const RegularLinearOptions& options, RegularLinearStats* stats) {
  if (k < 2 || n == 0 || n % k != 0) {
    throw InputError("regular_linear: need k >= 2, n > 0 and k | n (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  if (d > (n - 1) / (k - 1)) {
    throw InputError("regular_linear: d = " + std::to_string(d) + " exceeds (n-1)/(k-1) = " +
                     std::to_string((n - 1) / (k - 1)));
  }
  if (d == 0) return Hypergraph(n);
  RegularLinearStats local;
  std::size_t deepest = 1;
  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    local.restarts_used = restart;
    Packer packer(n, k);
    std::vector<Edge> edges;
    std::vector<Vertex> identity(n);
    std::iota(identity.begin(), identity.end(), Vertex{0});
    for (std::size_t b = 0; b < n; b += k) {
      edges.emplace_back(identity.begin() + b, identity.begin() + b + k);
      packer.add_block_pairs(edges.back());
    }
    std::size_t level = 1;
    for (; level < d; ++level) {
      bool placed = false;
      for (std::size_t attempt = 0; attempt < options.permutations_per_level; ++attempt) {
        ++local.permutations_tried;
        Rng rng = make_rng(seed, {string_tag("regular_linear"), restart, level, attempt});
        std::vector<Vertex> perm = identity;
        std::shuffle(perm.begin(), perm.end(), rng);
        if (!packer.repair(perm, rng, options.swaps_per_vertex * n)) continue;
        for (std::size_t b = 0; b < n; b += k) {
          Edge e(perm.begin() + b, perm.begin() + b + k);
          std::sort(e.begin(), e.end());
          packer.add_block_pairs(e);
          edges.push_back(std::move(e));
        }
        placed = true;
        break;
      }
      if (!placed) break;
    }
    deepest = std::max(deepest, level);
    if (level == d) {
      Hypergraph h(n, std::move(edges));
      verify_regular_linear(h, d);
      if (stats) *stats = local;
      return h;
    }
  }
  if (stats) *stats = local;
  throw ConstructionFailed("regular_linear: packing search exhausted its budget at level " +
                               std::to_string(deepest + 1) + " of " + std::to_string(d),
                           deepest);
}

}  // namespace omitlab
