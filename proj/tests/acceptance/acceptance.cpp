// One PASS/FAIL line per acceptance criterion. Every certificate below is
// re-derived here from first principles where that is cheap, and the library
// oracle is run alongside it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <omitlab/bipartite.hpp>
#include <omitlab/constructions.hpp>
#include <omitlab/error.hpp>
#include <omitlab/experiment.hpp>
#include <omitlab/omitting_system.hpp>
#include <omitlab/oracles.hpp>
#include <omitlab/processes.hpp>
#include <omitlab/regular_linear.hpp>
#include <omitlab/spectral.hpp>

using namespace omitlab;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs = since(start);
  if (v.ok && secs >= limit_seconds) v.fail("over time limit");
  if (!v.ok) ++failures;
  std::printf("%s %2d %-28s %8.2fs  %s\n", v.ok ? "PASS" : "FAIL", id, name, secs, v.detail.c_str());
  std::fflush(stdout);
}

bool independent(const Hypergraph& h, const VertexSet& s) {
  std::vector<char> in(h.vertex_count(), 0);
  for (Vertex v : s) in[v] = 1;
  for (const auto& e : h.edges())
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v]; })) return false;
  return true;
}

bool maximal(const Hypergraph& h, const VertexSet& s) {
  std::vector<char> in(h.vertex_count(), 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<char> blocked(h.vertex_count(), 0);
  for (const auto& e : h.edges()) {
    std::size_t outside = 0;
    Vertex last = 0;
    for (Vertex v : e)
      if (!in[v]) ++outside, last = v;
    if (outside == 1) blocked[last] = 1;
  }
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (!in[v] && !blocked[v]) return false;
  return true;
}

bool linear(const Hypergraph& h) {
  std::map<std::pair<Vertex, Vertex>, int> seen;
  for (const auto& e : h.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        if (++seen[{e[a], e[b]}] > 1) return false;
  return true;
}

// alpha by dynamic programming over all subsets; n <= 20.
std::size_t alpha_by_enumeration(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<std::uint32_t>> through(n);
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (Vertex v : e) m |= 1u << v;
    through[e.front()].push_back(m);  // charged to its lowest vertex
  }
  std::vector<char> ok(std::size_t{1} << n, 0);
  ok[0] = 1;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
    bool good = ok[mask & (mask - 1)];
    // Edges whose lowest vertex is `low` and lie in mask.
    if (good)
      for (std::uint32_t e : through[low])
        if ((e & mask) == e) { good = false; break; }
    // Edges with lowest vertex above `low` were checked in the submask.
    ok[mask] = good;
    if (good) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

bool edge_contains(const Edge& big, const Edge& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::size_t meet(const Edge& a, const Edge& b) {
  std::size_t c = 0;
  for (Vertex v : a) c += std::binary_search(b.begin(), b.end(), v);
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::uint32_t, std::size_t>> field_params{{3, 2}, {5, 2}, {7, 2}, {3, 3}};

  criterion(1, "spectrum-certificate", 10.0, [&](Verdict& v) {
    double worst = 0;
    for (auto [q, l] : field_params) {
      const SpectrumReport r = spectrum(build_polynomial_graph(q, l));
      // Closed form written out here: +-q^{l/2} once, +-q^{(l-1)/2} with
      // multiplicity q^2 - q, zeros for the rest.
      const std::size_t dim = r.eigenvalues.size();
      const std::size_t mult = q * q - q;
      std::vector<double> want;
      want.push_back(std::pow(q, l / 2.0));
      for (std::size_t i = 0; i < mult; ++i) want.push_back(std::pow(q, (l - 1) / 2.0));
      while (want.size() < dim - mult - 1) want.push_back(0.0);
      for (std::size_t i = 0; i < mult; ++i) want.push_back(-std::pow(q, (l - 1) / 2.0));
      want.push_back(-std::pow(q, l / 2.0));
      if (want.size() != dim) {
        v.fail("dimension mismatch");
        return;
      }
      for (std::size_t i = 0; i < dim; ++i) worst = std::max(worst, std::abs(want[i] - r.eigenvalues[i]));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max error %.2e", worst);
    v.detail = buf;
    if (worst > 1e-8) v.fail(v.detail);
  });

  criterion(2, "regularity-zarankiewicz", 5.0, [&](Verdict& v) {
    for (auto [q, l] : field_params) {
      const BipartiteGraph g = build_polynomial_graph(q, l);
      const std::size_t d2 = static_cast<std::size_t>(std::llround(std::pow(q, l - 1)));
      std::vector<std::size_t> right(g.right_count(), 0);
      for (std::size_t a = 0; a < g.left_count(); ++a) {
        if (g.neighbors(a).size() != q) v.fail("left degree");
        for (Vertex r : g.neighbors(a)) ++right[r];
      }
      for (std::size_t c : right)
        if (c != d2) v.fail("right degree");
      // Exhaustive pair scan through the right side.
      std::vector<std::uint32_t> common(g.left_count());
      std::vector<std::vector<std::uint32_t>> by_right(g.right_count());
      for (std::size_t a = 0; a < g.left_count(); ++a)
        for (Vertex r : g.neighbors(a)) by_right[r].push_back(static_cast<std::uint32_t>(a));
      for (std::size_t a = 0; a < g.left_count(); ++a) {
        std::fill(common.begin(), common.end(), 0);
        for (Vertex r : g.neighbors(a))
          for (std::uint32_t b : by_right[r])
            if (b > a && ++common[b] >= l) v.fail("left pair with l common neighbours");
      }
      if (k2l_free_check(g, l)) v.fail("k2l_free_check found a biclique");
    }
    v.detail = "4 graphs";
  });

  criterion(3, "mixing", 5.0, [&](Verdict& v) {
    const BipartiteGraph g = build_polynomial_graph(7, 2);
    const double lambda = spectrum(g).lambda2;
    const MixingSweep s = random_mixing_sweep(g, lambda, 1000, 2024);
    // Spot-recount a few pairs directly.
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
      std::vector<Vertex> x, y;
      for (Vertex a = 0; a < g.left_count(); ++a)
        if (rng() & 1) x.push_back(a);
      for (Vertex b = 0; b < g.right_count(); ++b)
        if (rng() & 1) y.push_back(b);
      std::size_t e = 0;
      for (Vertex a : x)
        for (Vertex b : y) e += g.has_edge(a, b);
      const double expect = 7.0 * x.size() * y.size() / g.right_count();
      if (std::abs(e - expect) > lambda * std::sqrt(double(x.size()) * y.size()) + 1e-9) v.fail("direct recount");
    }
    v.detail = std::to_string(s.pairs) + " pairs, " + std::to_string(s.violations) + " violations";
    if (s.pairs != 1000 || s.violations != 0) v.fail(v.detail);
  });

  criterion(4, "omitting-certificate", 600.0, [&](Verdict& v) {
    const std::uint32_t q = smallest_feasible_prime(2, 3);
    double slowest = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto start = Clock::now();
      OmittingSystemOptions o;
      o.q = q;
      o.seed = seed;
      const OmittingSystemBuild b = omitting_system(o);
      if (omitting_check(b.hypergraph, 2)) v.fail("omitting_check witness");
      // k = 3, l = 2: an offending pair is a vertex pair inside two edges.
      std::unordered_map<std::uint64_t, int> pairs;
      for (const auto& e : b.hypergraph.edges())
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t c = a + 1; c < 3; ++c)
            if (++pairs[(std::uint64_t(e[a]) << 32) | e[c]] > 1) v.fail("pair in two edges");
      if (b.hypergraph.uniformity() != std::optional<std::size_t>(3)) v.fail("not 3-uniform");
      const double secs = since(start);
      slowest = std::max(slowest, secs);
      if (secs >= 60.0) v.fail("build over 60 s");
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "q=%u, 10 seeds, slowest build %.2fs", q, slowest);
    if (v.ok) v.detail = buf;
  });

  criterion(5, "ramsey-certificate", 120.0, [&](Verdict& v) {
    for (auto [t, k] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 3}, {6, 3}, {7, 3}, {6, 4}}) {
      const std::size_t m = t / 2, n = (t - 1) / (2 * (k - 2));
      const auto [pm, pn] = ramsey_fan_parameters(t, k);
      if (pm != m || pn != n) v.fail("parameters");
      const Hypergraph l = l_construction(m, n, k);
      if (contains_fan(l, 1'000'000'000)) v.fail("fan found");
      const std::size_t a = max_independent_set_exact(l, 1'000'000'000).alpha;
      if (a > t - 1) v.fail("alpha > t-1");
    }
    for (std::size_t k : {3u, 4u})
      for (std::size_t m = 1; m <= 5; ++m)
        for (std::size_t n = 1; n <= 4; ++n) {
          const Hypergraph l = l_construction(m, n, k);
          const std::size_t a = max_independent_set_exact(l, 1'000'000'000).alpha;
          if (l.vertex_count() <= 20 && a != alpha_by_enumeration(l)) v.fail("alpha disagrees with enumeration");
          if (a >= m + (k - 2) * n) v.fail("alpha >= m+(k-2)n");
        }
    v.detail = "4 (t,k) pairs, 40 (m,n,k) triples";
  });

  criterion(6, "greedy-validity-uniformity", 1e9, [&](Verdict& v) {
    std::vector<Hypergraph> desk;
    for (std::uint64_t i = 0; i < 6; ++i) desk.push_back(random_uniform(20 + 2 * i, 3 + i % 2, 40 + 5 * i, i));
    for (std::size_t d = 1; d <= 4; ++d) desk.push_back(regular_linear(9, 3, d, 0));
    desk.push_back(regular_linear(12, 3, 3, 0));
    desk.push_back(l_construction(4, 3, 3));
    desk.push_back(l_construction(5, 4, 4));
    desk.push_back(fan(4));
    desk.push_back(sunflower(4, 2, 6));
    desk.push_back(complete_hypergraph(9, 3));
    desk.push_back(perfect_matching(24, 4));
    desk.push_back(random_omitting_system(30, 4, 2, 600, 1));
    desk.push_back(random_omitting_system(36, 3, 1, 700, 2));
    desk.push_back(random_uniform(30, 2, 60, 77));
    std::size_t runs = 0;
    for (std::size_t i = 0; i < desk.size(); ++i)
      for (std::uint64_t s = 0; s < 1000; ++s) {
        const GreedyTrace t = greedy_independent_set(desk[i], s);
        ++runs;
        if (!t.completed || !independent(desk[i], t.independent_set) || !maximal(desk[i], t.independent_set)) {
          v.fail("instance " + std::to_string(i) + " seed " + std::to_string(s));
          return;
        }
      }
    const Hypergraph empty(20);
    const std::size_t trials = 20000;
    std::size_t hits = 0;
    for (std::uint64_t s = 0; s < trials; ++s) {
      const GreedyTrace t = greedy_independent_set(empty, 1'000'000 + s, 5);
      if (t.independent_set.size() != 5) v.fail("I(5) size");
      hits += std::binary_search(t.independent_set.begin(), t.independent_set.end(), Vertex{0}) &&
              std::binary_search(t.independent_set.begin(), t.independent_set.end(), Vertex{1});
    }
    const double p = 20.0 / 380.0, freq = double(hits) / trials;
    const double se = std::sqrt(p * (1 - p) / trials);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu runs; pair freq %.5f vs %.5f (%.2f SE)", runs, freq, p, (freq - p) / se);
    v.detail = buf;
    if (std::abs(freq - p) > 4 * se) v.fail(buf);
  });

  criterion(7, "decomposition-invariants", 300.0, [&](Verdict& v) {
    std::mt19937_64 rng(31);
    std::size_t members = 0, splits = 0;
    for (int inst = 0; inst < 30; ++inst) {
      const std::size_t k = 3 + inst % 4;
      const std::size_t n = 20 + rng() % 21;
      std::size_t l = 1 + rng() % (k - 1);
      Hypergraph h;
      if (inst < 15) {
        h = random_omitting_system(n, k, l, 20 * n, rng());
      } else {
        std::vector<SunflowerPlacement> ps;
        const std::size_t count = 2 + rng() % 4;
        for (std::size_t i = 0; i < count; ++i) {
          const std::size_t core = 1 + rng() % (k - 1);
          const std::size_t room = (n - core) / (k - core);
          ps.push_back({core, std::min<std::size_t>(room, 2 + rng() % (4 * k))});
        }
        h = sunflower_union(n, k, ps, rng());
        l = 2;
      }
      const std::size_t k0 = std::max<std::size_t>(2, k - 1 - rng() % 3);
      const DecompositionResult r = decompose(h, k0, 2);
      members += r.family.size();
      splits += r.splits;
      if (r.family.size() > (std::size_t{1} << (k - k0))) v.fail("family too large");
      for (const auto& mem : r.family)
        if (!indecomposability_check(mem.hypergraph, k0, 2, k).indecomposable) v.fail("member decomposable");
      for (const auto& e : h.edges()) {
        bool covered = false;
        for (const auto& mem : r.family)
          for (const auto& f : mem.hypergraph.edges()) covered = covered || edge_contains(e, f);
        if (!covered) v.fail("edge not covered");
      }
      std::vector<Hypergraph> fam;
      for (const auto& mem : r.family) fam.push_back(mem.hypergraph);
      const DeletionResult d = deletion_lower_bound(fam, deletion_probability(n, l), 20, rng());
      if (!independent(h, d.best)) v.fail("deletion output not independent");
    }
    v.detail = "30 instances, " + std::to_string(members) + " members, " + std::to_string(splits) + " splits";
  });

  criterion(8, "matching-floor", 1e9, [&](Verdict& v) {
    std::size_t done = 0, drawn = 0;
    double tightest = 1e300;
    for (std::uint64_t seed = 0; done < 30 && drawn < 1000; ++seed, ++drawn) {
      const std::size_t k = 3 + seed % 2, lambda = 1 + seed % 2;
      const std::size_t n = 12 + seed % 19;
      const Hypergraph h = random_uniform(n, k, n + seed % 40, seed);
      const std::vector<double> lam = decomposition_lambdas(k, lambda);
      bool free = true;
      for (std::size_t i = 1; i < k && free; ++i)
        free = !contains_sunflower(h, k - i, static_cast<std::size_t>(lam[i - 1])).has_value();
      if (!free) continue;
      ++done;
      const GreedyMatching g = greedy_matching(h, lam);
      for (std::size_t a = 0; a < g.edges.size(); ++a)
        for (std::size_t b = a + 1; b < g.edges.size(); ++b)
          if (meet(h.edge(g.edges[a]), h.edge(g.edges[b])) != 0) v.fail("not a matching");
      double prod = 1;
      for (std::size_t i = 1; i < k; ++i) prod *= (i + 1) * lam[i - 1];
      const double floor = double(h.edge_count()) / prod;
      if (double(g.edges.size()) < floor) v.fail("below floor");
      tightest = std::min(tightest, double(g.edges.size()) - floor);
    }
    if (done < 30) v.fail("only " + std::to_string(done) + " verified instances");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu instances, smallest slack %.3f", done, tightest);
    if (v.ok) v.detail = buf;
  });

  criterion(9, "regular-linear-builder", 1e9, [&](Verdict& v) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cases{
        {9, 3, 1}, {9, 3, 2}, {9, 3, 3}, {9, 3, 4}, {16, 4, 2}, {12, 3, 3}};
    std::string notes;
    for (auto [n, k, d] : cases) {
      bool ok = false;
      for (std::uint64_t seed = 0; seed < 5 && !ok; ++seed) {
        const auto start = Clock::now();
        try {
          const Hypergraph h = regular_linear(n, k, d, seed);
          const auto deg = h.vertex_degrees();
          ok = h.uniformity() == std::optional<std::size_t>(k) && h.edge_count() * k == n * d &&
               std::all_of(deg.begin(), deg.end(), [&](std::size_t x) { return x == d; }) && linear(h) &&
               since(start) < 10.0;
        } catch (const ConstructionFailed&) {
        }
      }
      if (!ok) v.fail("(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + ")");
    }
    if (v.ok) v.detail = "6 parameter sets";
  });

  criterion(10, "oracle-cross-validation", 1e9, [&](Verdict& v) {
    std::size_t bad = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
      const std::size_t n = 6 + s % 13;
      const std::size_t k = 2 + s % 4;
      const Hypergraph h = random_uniform(n, std::min(k, n), n + (s * 7) % (3 * n), 500 + s);
      if (max_independent_set_exact(h).alpha != alpha_by_enumeration(h)) ++bad;
    }
    std::size_t bad2 = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const std::size_t k = 3 + s % 3, n = 8 + s % 9;
      const std::size_t l = s % k;
      const Hypergraph h = random_uniform(n, k, 3 + s % 12, 9000 + s);
      bool pair = false;
      for (std::size_t a = 0; a < h.edge_count() && !pair; ++a)
        for (std::size_t b = a + 1; b < h.edge_count() && !pair; ++b) pair = meet(h.edge(a), h.edge(b)) == l;
      const bool oc = omitting_check(h, l).has_value();
      const bool sf = contains_sunflower(h, l, 2).has_value();
      if (oc != sf || oc != pair) ++bad2;
    }
    v.detail = std::to_string(bad) + "/200 alpha, " + std::to_string(bad2) + "/1000 omitting disagreements";
    if (bad || bad2) v.fail(v.detail);
  });

  criterion(11, "trend-tables", 1e9, [&](Verdict& v) {
    const std::vector<nlohmann::json> configs{
        {{"kind", "greedy-scaling"}, {"grid", {{"n", {12, 15, 21}}, {"k", {3}}, {"d", {2, 3}}}}, {"trials", 20}},
        {{"kind", "omitting-alpha"}, {"grid", {{"n", {16, 20}}, {"k", {3}}, {"l", {1}}}}, {"trials", 2}},
        {{"kind", "decompose-deletion"}, {"grid", {{"n", {20, 30}}, {"k", {4}}, {"l", {1, 2}}}}, {"trials", 10}},
        {{"kind", "spectrum-sweep"}, {"grid", {{"q", {3, 5}}, {"l", {2}}}}},
        {{"kind", "mixing-sweep"}, {"grid", {{"q", {5}}, {"l", {2}}}}},
    };
    std::size_t rows = 0;
    for (const auto& j : configs) {
      const auto c = ExperimentConfig::from_json(j);
      const ExperimentOutcome a = run_experiment(c, 17, 1);
      const ExperimentOutcome b = run_experiment(c, 17, 2);
      if (a.table.empty()) v.fail(c.kind + " empty");
      if (a.table.to_csv() != b.table.to_csv()) v.fail(c.kind + " not deterministic");
      if (!a.table.ratios_finite_positive()) v.fail(c.kind + " ratio not finite/positive");
      rows += a.table.rows().size();
    }
    if (v.ok) v.detail = std::to_string(rows) + " rows";
  });

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
