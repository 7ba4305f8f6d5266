#include <doctest.h>

#include <numeric>
#include <sstream>

#include <omitlab/bipartite.hpp>
#include <omitlab/combinatorics.hpp>
#include <omitlab/constructions.hpp>
#include <omitlab/edge_list.hpp>
#include <omitlab/error.hpp>
#include <omitlab/hypergraph.hpp>
#include <omitlab/hypergraph_ops.hpp>

#include "brute.hpp"

using namespace omitlab;

TEST_CASE("hypergraph construction validates and deduplicates") {
  const Hypergraph h(4, {{2, 1, 0}, {0, 1, 2}, {1, 3}});
  CHECK(h.edge_count() == 2);
  CHECK(h.collapsed_duplicates() == 1);
  CHECK(h.edges()[0] == Edge{0, 1, 2});
  CHECK_FALSE(h.uniformity().has_value());
  CHECK_THROWS_AS(Hypergraph(3, {{0}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), InputError);
  CHECK(Hypergraph(0).empty());
}

TEST_CASE("link") {
  SUBCASE("pair core leaves singleton residues") {
    const Hypergraph h(4, {{0, 1, 2}, {0, 1, 3}});
    const std::vector<Vertex> s{0, 1};
    const auto r = link(h, s);
    CHECK(r.link.empty());
    CHECK(r.small_edges == 2);
    CHECK(r.degree() == 2);
  }
  SUBCASE("vertex in no edge") {
    const Hypergraph h(4, {{0, 1, 2}});
    const std::vector<Vertex> s{3};
    CHECK(link(h, s).degree() == 0);
  }
  SUBCASE("sunflower centre gives a perfect matching") {
    const std::vector<Vertex> s{0};
    const auto r = link(sunflower(3, 1, 3), s);
    CHECK(r.link.edge_count() == 3);
    CHECK(r.link.uniformity() == std::optional<std::size_t>(2));
    CHECK(cycle_census(r.link).counts[0] == 3);
  }
  SUBCASE("out of range") {
    const std::vector<Vertex> s{9};
    CHECK_THROWS_AS(link(Hypergraph(4, {{0, 1}}), s), InputError);
  }
  SUBCASE("degree via link equals direct scan") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Hypergraph h = brute::random_uniform(9, 4, 25, seed);
      for (Vertex a = 0; a < 9; ++a)
        for (Vertex b = a + 1; b < 9; ++b) {
          const std::vector<Vertex> s{a, b};
          std::size_t direct = 0;
          for (const auto& e : h.edges())
            if (std::count(e.begin(), e.end(), a) && std::count(e.begin(), e.end(), b)) ++direct;
          CHECK(link(h, s).degree() == direct);
          CHECK(set_degree(h, s) == direct);
        }
    }
  }
}

TEST_CASE("shadow") {
  CHECK(shadow(Hypergraph(4, {{0, 1, 2, 3}}), 1).edge_count() == 4);
  const Hypergraph s = shadow(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}), 1);
  CHECK(s.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(shadow(Hypergraph(5), 1).empty());
  CHECK_THROWS_AS(shadow(Hypergraph(4, {{0, 1, 2}}), 1 + 1), InputError);
  CHECK_THROWS_AS(shadow(Hypergraph(4, {{0, 1, 2}, {0, 1}}), 1), InputError);

  SUBCASE("composition") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Hypergraph h = brute::random_uniform(10, 5, 12, seed);
      CHECK(shadow(shadow(h, 1), 1) == shadow(h, 2));
      CHECK(shadow(shadow(h, 1), 2) == shadow(h, 3));
    }
  }
}

TEST_CASE("degree_profile") {
  SUBCASE("two triples sharing a pair") {
    const DegreeReport r = degree_profile(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}));
    CHECK(r.max_i_degree[1] == 2);
    CHECK(r.max_i_degree[2] == 2);
    CHECK(r.codegree_max == 1);
    CHECK(r.max_degree == 2);
  }
  SUBCASE("perfect matching") {
    const DegreeReport r = degree_profile(perfect_matching(6, 3));
    CHECK(r.max_i_degree[1] == 1);
    CHECK(r.max_i_degree[2] == 1);
    CHECK(r.codegree_max == 0);
    CHECK(r.average_degree() == doctest::Approx(1.0));
  }
  SUBCASE("complete 3-graph on 4 vertices") {
    const Hypergraph k4 = complete_hypergraph(4, 3);
    const DegreeReport r = degree_profile(k4);
    CHECK(r.max_i_degree[1] == 3);
    CHECK(r.max_i_degree[2] == 2);
    // Each pair {u,v} has exactly one witness S, the complementary pair.
    CHECK(r.codegree_max == 1);
    CHECK(r.codegree_max == brute::codegree(k4, 3));
    CHECK(r.average_degree() == doctest::Approx(3.0));
  }
  SUBCASE("codegree against brute force") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const Hypergraph h = brute::random_uniform(8, 3, 20, seed);
      CHECK(degree_profile(h).codegree_max == brute::codegree(h, 3));
      const Hypergraph h4 = brute::random_uniform(8, 4, 30, seed);
      CHECK(degree_profile(h4).codegree_max == brute::codegree(h4, 4));
    }
  }
  SUBCASE("max i-degree matches max_i_degree") {
    const Hypergraph h = brute::random_uniform(10, 4, 30, 3);
    const DegreeReport r = degree_profile(h);
    for (std::size_t i = 1; i < 4; ++i) CHECK(r.max_i_degree[i] == max_i_degree(h, i));
    CHECK(r.max_degree == r.max_i_degree[1]);
  }
  CHECK_THROWS_AS(degree_profile(Hypergraph(4, {{0, 1, 2}, {0, 1}})), InputError);
}

TEST_CASE("cycle_census") {
  const CycleCensus a = cycle_census(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}));
  CHECK(a.counts == std::vector<std::size_t>{0, 0, 1});
  CHECK_FALSE(a.is_linear);
  const CycleCensus m = cycle_census(perfect_matching(12, 3));
  CHECK(m.counts == std::vector<std::size_t>{6, 0, 0});
  CHECK(m.is_linear);
  const CycleCensus c = cycle_census(complete_hypergraph(4, 3));
  CHECK(c.counts == std::vector<std::size_t>{0, 0, 6});

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Hypergraph h = brute::random_uniform(12, 4, 40, seed);
    const CycleCensus cc = cycle_census(h);
    CHECK(cc.counts == brute::cycle_counts(h, 4));
    CHECK(cc.total_pairs() == h.edge_count() * (h.edge_count() - 1) / 2);
  }
}

TEST_CASE("cartesian_product") {
  SUBCASE("one pair over two empty factors") {
    const std::vector<Hypergraph> f{Hypergraph(2), Hypergraph(2)};
    const Hypergraph p = cartesian_product(Hypergraph(2, {{0, 1}}), f);
    CHECK(p.vertex_count() == 4);
    CHECK(p.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  }
  SUBCASE("empty host gives disjoint copies") {
    const Hypergraph g(3, {{0, 1, 2}});
    const std::vector<Hypergraph> f(4, g);
    const Hypergraph p = cartesian_product(Hypergraph(4), f);
    CHECK(p.edge_count() == 4);
    CHECK(cycle_census(p).counts[0] == 6);
  }
  SUBCASE("edge count") {
    const Hypergraph m(2, {{0, 1}});
    const std::vector<Hypergraph> f(3, m);
    CHECK(cartesian_product(Hypergraph(3, {{0, 1, 2}}), f).edge_count() == 5);
  }
  SUBCASE("vertex degrees add") {
    const Hypergraph h = brute::random_uniform(6, 3, 5, 11);
    std::vector<Hypergraph> f;
    for (std::uint64_t i = 0; i < 6; ++i) f.push_back(brute::random_uniform(6, 3, 4, 100 + i));
    const Hypergraph p = cartesian_product(h, f);
    const auto dp = p.vertex_degrees();
    const auto dh = h.vertex_degrees();
    for (std::size_t i = 0; i < 6; ++i) {
      const auto df = f[i].vertex_degrees();
      for (std::size_t v = 0; v < 6; ++v) CHECK(dp[i * 6 + v] == dh[i] + df[v]);
    }
  }
  SUBCASE("size mismatch") {
    const std::vector<Hypergraph> f{Hypergraph(2)};
    CHECK_THROWS_AS(cartesian_product(Hypergraph(2, {{0, 1}}), f), InputError);
  }
}

TEST_CASE("induced") {
  const Hypergraph t(3, {{0, 1, 2}});
  const std::vector<Vertex> all{0, 1, 2}, two{0, 1}, four{0, 2, 3, 4};
  CHECK(induced(t, all).edge_count() == 1);
  CHECK(induced(t, two).empty());
  const Hypergraph k = induced(complete_hypergraph(5, 3), four);
  CHECK(k == complete_hypergraph(4, 3));
  const Hypergraph h = brute::random_uniform(9, 3, 20, 5);
  std::vector<Vertex> full(9);
  std::iota(full.begin(), full.end(), Vertex{0});
  CHECK(induced(h, full) == h);
  const std::vector<Vertex> bad{0, 9};
  CHECK_THROWS_AS(induced(h, bad), InputError);
}

TEST_CASE("regularity_audit") {
  const auto pm = regularity_audit(perfect_matching(9, 3), 1, 3, 1);
  CHECK(pm.uniform);
  CHECK(pm.regular);
  const Hypergraph mixed(8, {{0, 1}, {0, 1, 2, 3, 4, 5, 6, 7}});
  CHECK(regularity_audit(mixed, 2, 4, 1).uniform);
  const auto bad = regularity_audit(mixed, 1.5, 4, 1);
  CHECK_FALSE(bad.uniform);
  CHECK(bad.offending_edges == std::vector<std::size_t>{0, 1});
  const auto inc = regularity_audit(incidence_hypergraph(build_polynomial_graph(3, 2)), 1, 3, 3);
  CHECK(inc.uniform);
  CHECK(inc.regular);
}

TEST_CASE("edge list round trip and parse errors") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Hypergraph h = brute::random_uniform(15, 4, 30, seed);
    const std::string text = to_edge_list(h);
    CHECK(parse_edge_list(text) == h);
    CHECK(to_edge_list(parse_edge_list(text)) == text);
  }
  CHECK(parse_edge_list("# comment\n3 1\n\n0 1 2\n") == Hypergraph(3, {{0, 1, 2}}));
  try {
    parse_edge_list("3 2\n0 1\n0 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 7\n"), ParseError);
}

TEST_CASE("binomial and subsets") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(60, 30) == 118264581564861424ull);
  CHECK(binomial(200, 100) == kSaturated);
  CHECK(all_subsets(5, 3).size() == 10);
}
