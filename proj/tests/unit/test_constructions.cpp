#include <doctest.h>

#include <cmath>
#include <set>

#include <omitlab/bipartite.hpp>
#include <omitlab/combinatorics.hpp>
#include <omitlab/constructions.hpp>
#include <omitlab/error.hpp>
#include <omitlab/fitting.hpp>
#include <omitlab/hypergraph_ops.hpp>
#include <omitlab/omitting_system.hpp>
#include <omitlab/oracles.hpp>
#include <omitlab/regular_linear.hpp>

#include "brute.hpp"

using namespace omitlab;

TEST_CASE("sunflower") {
  const Hypergraph a = sunflower(3, 1, 3);
  CHECK(a.edge_count() == 3);
  CHECK(a.vertex_count() == 7);
  for (const auto& e : a.edges()) CHECK(e.front() == 0);
  const Hypergraph b = sunflower(4, 2, 2);
  CHECK(b.edge_count() == 2);
  CHECK(b.vertex_count() == 6);
  CHECK(brute::intersection(b.edge(0), b.edge(1)) == 2);
  CHECK(sunflower(5, 2, 1).edge_count() == 1);
  CHECK_THROWS_AS(sunflower(3, 3, 2), InputError);
  CHECK_THROWS_AS(sunflower(3, 0, 2), InputError);

  for (std::size_t k = 2; k <= 6; ++k)
    for (std::size_t l = 1; l < k; ++l)
      for (std::size_t lambda = 1; lambda <= 5; ++lambda) {
        const CycleCensus c = cycle_census(sunflower(k, l, lambda));
        for (std::size_t j = 0; j < k; ++j) CHECK(c.counts[j] == (j == l ? binomial(lambda, 2) : 0));
      }
}

TEST_CASE("fan") {
  const Hypergraph f2 = fan(2);
  CHECK(f2 == Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}));
  const Hypergraph f3 = fan(3);
  CHECK(f3.edge_count() == 4);
  CHECK(f3.vertex_count() == 7);
  std::size_t through_apex = 0;
  for (const auto& e : f3.edges()) through_apex += e.front() == 0;
  CHECK(through_apex == 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      CHECK(brute::intersection(f3.edge(i), f3.edge(j)) == 1);
  CHECK(fan(4).edge_count() == 5);
  CHECK(fan(4).vertex_count() == 13);
  CHECK_THROWS_AS(fan(1), InputError);
}

TEST_CASE("l_construction") {
  CHECK(l_construction(3, 2, 3).edge_count() == 3);
  CHECK(l_construction(3, 2, 3).vertex_count() == 6);
  CHECK(l_construction(2, 3, 3).edge_count() == 3);
  CHECK(l_construction(1, 4, 3).empty());
  CHECK(l_construction(2, 4, 4).empty());
  CHECK_THROWS_AS(l_construction(3, 3, 2), InputError);

  // Brute-force enumeration of the defining edge set.
  for (std::size_t k = 3; k <= 4; ++k)
    for (std::size_t m = 1; m <= 5; ++m)
      for (std::size_t n = 1; n <= 4; ++n) {
        std::set<Edge> want;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
          if (static_cast<std::size_t>(__builtin_popcount(mask)) != k - 1) continue;
          std::vector<std::size_t> xs;
          for (std::size_t x = 0; x < m; ++x)
            if (mask >> x & 1) xs.push_back(x);
          for (std::size_t y1 = 0; y1 < n; ++y1)
            for (std::size_t y2 = 0; y2 < y1; ++y2) {
              Edge e{static_cast<Vertex>(xs[0] * n + y1)};
              for (std::size_t x : xs) e.push_back(static_cast<Vertex>(x * n + y2));
              std::sort(e.begin(), e.end());
              want.insert(e);
            }
        }
        const Hypergraph h = l_construction(m, n, k);
        CHECK(h.vertex_count() == m * n);
        CHECK(std::set<Edge>(h.edges().begin(), h.edges().end()) == want);
        CHECK(h.edge_count() == binomial(m, k - 1) * binomial(n, 2));
      }
}

TEST_CASE("l_construction is fan-free and below the independence ceiling") {
  for (std::size_t k = 3; k <= 4; ++k)
    for (std::size_t m = 1; m <= 5; ++m)
      for (std::size_t n = 1; n <= 4; ++n) {
        const Hypergraph h = l_construction(m, n, k);
        CHECK_FALSE(contains_fan(h).has_value());
        if (h.vertex_count() <= 20) {
          CHECK(brute::alpha(h) < m + (k - 2) * n);
        }
      }
}

TEST_CASE("ramsey_fan_parameters") {
  CHECK(ramsey_fan_parameters(7, 3) == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(ramsey_fan_parameters(6, 4) == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(ramsey_fan_parameters(3, 3) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_THROWS_AS(ramsey_fan_parameters(2, 3), InputError);
}

TEST_CASE("regular_linear") {
  SUBCASE("d = 1 is the base matching") {
    const Hypergraph h = regular_linear(9, 3, 1, 0);
    CHECK(h == perfect_matching(9, 3));
  }
  SUBCASE("small designs") {
    for (std::size_t d = 2; d <= 4; ++d) {
      bool built = false;
      for (std::uint64_t seed = 0; seed < 5 && !built; ++seed) {
        try {
          const Hypergraph h = regular_linear(9, 3, d, seed);
          built = true;
          CHECK(h.edge_count() == 3 * d);
          CHECK(degree_profile(h).max_i_degree[1] == d);
          for (auto deg : h.vertex_degrees()) CHECK(deg == d);
          CHECK(brute::cycle_counts(h, 3)[2] == 0);
        } catch (const ConstructionFailed&) {
        }
      }
      CHECK(built);
    }
  }
  SUBCASE("same seed, same output") {
    CHECK(regular_linear(12, 3, 3, 4) == regular_linear(12, 3, 3, 4));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(regular_linear(10, 3, 1, 0), InputError);
    CHECK_THROWS_AS(regular_linear(9, 3, 5, 0), InputError);
    CHECK(regular_linear(9, 3, 0, 0).empty());
  }
  SUBCASE("failure reports the level reached") {
    RegularLinearOptions tiny;
    tiny.permutations_per_level = 1;
    tiny.restarts = 1;
    tiny.swaps_per_vertex = 0;
    bool failed = false;
    for (std::uint64_t seed = 0; seed < 20 && !failed; ++seed) {
      try {
        regular_linear(9, 3, 4, seed, tiny);
      } catch (const ConstructionFailed& e) {
        failed = true;
        CHECK(e.level_reached() >= 1);
        CHECK(e.level_reached() < 4);
      }
    }
    CHECK(failed);
  }
}

TEST_CASE("incidence_hypergraph") {
  const Hypergraph h = incidence_hypergraph(build_polynomial_graph(3, 2));
  CHECK(h.edge_count() == 9);
  CHECK(h.vertex_count() == 9);
  CHECK(h.uniformity() == std::optional<std::size_t>(3));
  for (auto d : h.vertex_degrees()) CHECK(d == 3);
  CHECK(incidence_hypergraph(BipartiteGraph(1, 2, {{0, 1}})) == Hypergraph(2, {{0, 1}}));
  const Hypergraph two = incidence_hypergraph(BipartiteGraph(2, 4, {{0, 1, 2}, {0, 1, 3}}));
  CHECK(brute::intersection(two.edge(0), two.edge(1)) == 2);
  const Hypergraph dup = incidence_hypergraph(BipartiteGraph(2, 3, {{0, 1}, {0, 1}}));
  CHECK(dup.edge_count() == 1);
  CHECK(dup.collapsed_duplicates() == 1);
  CHECK_THROWS_AS(incidence_hypergraph(BipartiteGraph(1, 2, {{0}})), InputError);
}

TEST_CASE("star members and fitting") {
  CHECK(star_member(3, 3, 1).edge_count() == 1);
  CHECK(star_member(5, 3, 1).edge_count() == 3);
  CHECK(star_member(6, 4, 2).edge_count() == 3);
  CHECK_THROWS_AS(star_member(2, 3, 1), InputError);
  const Hypergraph star = star_member(7, 4, 1);
  for (const auto& e : star.edges()) {
    CHECK(e[0] == 0);
    CHECK(e[1] == 1);
  }

  SUBCASE("realize: empty members and identity triangle") {
    FittingFamily f;
    f.base = Hypergraph(3, {{0, 1, 2}});
    f.members = {Hypergraph(3)};
    f.psi = {{0, 1, 2}};
    CHECK(realize(f).empty());
    f.members = {complete_hypergraph(3, 2)};
    CHECK(realize(f) == complete_hypergraph(3, 2));
    f.psi = {{0, 0, 1}};
    CHECK_THROWS_AS(validate_fitting(f), InputError);
  }
  SUBCASE("fitting_family_star is reproducible and valid") {
    const Hypergraph base = incidence_hypergraph(build_polynomial_graph(5, 2));
    const FittingFamily a = fitting_family_star(base, 3, 1, 17);
    const FittingFamily b = fitting_family_star(base, 3, 1, 17);
    CHECK(a.psi == b.psi);
    validate_fitting(a);
    const RealizeReport r = realize_with_report(a);
    CHECK(r.hypergraph.edge_count() + r.coincident() == r.member_edges);
    CHECK(r.member_edges == 25 * star_member(5, 3, 1).edge_count());
  }
  SUBCASE("realized system at q=5, l=2, k=4 omits intersections of size 2") {
    const Hypergraph base = incidence_hypergraph(build_polynomial_graph(5, 2));
    const Hypergraph h = realize(fitting_family_star(base, 4, 2, 3));
    CHECK_FALSE(brute::has_pair_meeting_in(h, 2));
    CHECK(h.uniformity() == std::optional<std::size_t>(4));
  }
}

TEST_CASE("subsample_vertices") {
  const Hypergraph base = incidence_hypergraph(build_polynomial_graph(7, 2));
  SUBCASE("p = 1 keeps everything") {
    SubsampleOptions o;
    o.p = 1.0;
    o.vertex_window = {49, 49};
    o.trace_window = {7, 7};
    const SubsampleResult r = subsample_vertices(base, o);
    CHECK(r.kept.size() == 49);
    CHECK(r.rejected_rounds == 0);
  }
  SUBCASE("vacuous trace window") {
    SubsampleOptions o;
    o.p = 0.5;
    o.trace_window = {0, 3};
    o.seed = 4;
    CHECK(subsample_vertices(Hypergraph(3, {{0, 1, 2}}), o).rejected_rounds == 0);
  }
  SUBCASE("joint windows at q=7 are outside the concentration regime") {
    const double p = std::pow(7.0, -2.0 / 3.0);
    SubsampleOptions o;
    o.p = p;
    o.vertex_window = {p * 49 / 2, 1.5 * p * 49};
    o.trace_window = {p * 7 / 2, 1.5 * p * 7};
    o.max_retries = 200;
    std::size_t failures = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      o.seed = seed;
      try {
        subsample_vertices(base, o);
      } catch (const SamplingError&) {
        ++failures;
      }
    }
    CHECK(failures == 5);
    // Prune mode accepts once |U| fits and every surviving trace is in band.
    o.policy = TracePolicy::prune;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      o.seed = seed;
      const SubsampleResult r = subsample_vertices(base, o);
      CHECK(o.vertex_window.contains(static_cast<double>(r.kept.size())));
      const Hypergraph t = trace_hypergraph(base, r);
      for (const auto& e : t.edges()) CHECK(o.trace_window.contains(static_cast<double>(e.size())));
    }
  }
  SUBCASE("reproducible") {
    SubsampleOptions o;
    o.p = 0.3;
    o.seed = 99;
    CHECK(subsample_vertices(base, o).kept == subsample_vertices(base, o).kept);
  }
  CHECK_THROWS_AS(subsample_vertices(base, SubsampleOptions{0.0}), InputError);
}

TEST_CASE("omitting_system") {
  CHECK_FALSE(omitting_preflight(53, 2, 3));
  CHECK(smallest_feasible_prime(2, 3) == 223);
  CHECK(omitting_preflight(223, 2, 3));
  CHECK_FALSE(omitting_preflight(211, 2, 3));
  CHECK_THROWS_AS(smallest_feasible_prime(1, 3), InputError);

  OmittingSystemOptions o;
  o.q = 53;
  CHECK_THROWS_AS(omitting_system(o), InputError);
  o.q = 221;  // 13 * 17
  CHECK_THROWS_AS(omitting_system(o), UnsupportedModulus);

  o.q = 223;
  o.seed = 1;
  const OmittingSystemBuild b = omitting_system(o);
  CHECK(b.omitting_verified);
  CHECK(b.hypergraph.uniformity() == std::optional<std::size_t>(3));
  CHECK(b.base_edges == 223u * 223u);
  CHECK(b.fitted_edges + b.pruned_edges == b.base_edges);
  CHECK(b.vertex_window.contains(static_cast<double>(b.kept_vertices)));
  CHECK(b.hypergraph.edge_count() + b.coincident >= b.fitted_edges);
  CHECK_FALSE(omitting_check(b.hypergraph, 2).has_value());
  CHECK(b.provenance()["verification"]["omitting_check"] == true);
  CHECK(omitting_system(o).hypergraph == b.hypergraph);
}

TEST_CASE("p_tau") {
  CHECK(p_tau(5, 1, 3) == Rational(3, 10));
  CHECK(p_tau(9, 2, 9) == Rational(1));
  CHECK(p_tau(8, 2, 3) == Rational(1, 56));
  CHECK_THROWS_AS(p_tau(5, 3, 3), InputError);

  // Enumeration over all tau-subsets of [m].
  for (std::size_t m = 3; m <= 10; ++m)
    for (std::size_t l = 1; l + 1 <= m; ++l)
      for (std::size_t tau = l + 1; tau <= m; ++tau) {
        std::size_t hit = 0, total = 0;
        for (std::uint32_t s = 0; s < (1u << m); ++s) {
          if (static_cast<std::size_t>(__builtin_popcount(s)) != tau) continue;
          ++total;
          const std::uint32_t need = (1u << (l + 1)) - 1;
          hit += (s & need) == need;
        }
        CHECK(p_tau(m, l, tau) == Rational(hit, total));
      }
  CHECK(default_tau(100, 2) == static_cast<std::size_t>(std::ceil(100 * std::sqrt(std::log(100.0)))));
}

TEST_CASE("random generators") {
  const Hypergraph r = random_uniform(12, 4, 30, 5);
  CHECK(r.edge_count() == 30);
  CHECK(r == random_uniform(12, 4, 30, 5));
  CHECK(random_uniform(5, 3, 100, 1).edge_count() == 10);
  const Hypergraph om = random_omitting_system(20, 4, 2, 400, 8);
  CHECK_FALSE(brute::has_pair_meeting_in(om, 2));
  const Hypergraph su = sunflower_union(30, 4, {{1, 5}, {2, 3}}, 2);
  CHECK(su.uniformity() == std::optional<std::size_t>(4));
  CHECK(contains_sunflower(su, 1, 5).has_value());
}
