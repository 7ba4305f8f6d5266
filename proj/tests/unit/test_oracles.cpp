#include <doctest.h>

#include <set>

#include <omitlab/constructions.hpp>
#include <omitlab/error.hpp>
#include <omitlab/hypergraph_ops.hpp>
#include <omitlab/oracles.hpp>
#include <omitlab/processes.hpp>
#include <omitlab/regular_linear.hpp>
#include <omitlab/serialize.hpp>
#include <omitlab/witness.hpp>

#include "brute.hpp"

using namespace omitlab;

namespace {

// Fan by definition, exhaustive over apex, crossing edge and k-subsets of the star.
bool brute_fan(const Hypergraph& h) {
  const auto k = h.uniformity();
  if (!k) return false;
  const auto& e = h.edges();
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    std::vector<std::size_t> star;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (std::count(e[i].begin(), e[i].end(), v)) star.push_back(i);
    if (star.size() < *k) continue;
    for (const auto& cross : e) {
      if (std::count(cross.begin(), cross.end(), v)) continue;
      std::vector<std::size_t> pick;
      std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
        if (pick.size() == *k) {
          std::set<Vertex> hit;
          for (std::size_t a = 0; a < pick.size(); ++a) {
            if (brute::intersection(e[pick[a]], cross) != 1) return false;
            for (Vertex x : e[pick[a]])
              if (std::count(cross.begin(), cross.end(), x)) hit.insert(x);
            for (std::size_t b = a + 1; b < pick.size(); ++b)
              if (brute::intersection(e[pick[a]], e[pick[b]]) != 1) return false;
          }
          return hit.size() == *k;
        }
        for (std::size_t i = from; i < star.size(); ++i) {
          pick.push_back(star[i]);
          if (rec(i + 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      if (rec(0)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("max_independent_set_exact") {
  for (std::size_t k = 2; k <= 5; ++k) CHECK(max_independent_set_exact(complete_hypergraph(8, k)).alpha == k - 1);
  const auto l32 = max_independent_set_exact(l_construction(3, 2, 3));
  CHECK(l32.alpha == 4);
  CHECK(max_independent_set_exact(perfect_matching(9, 3)).alpha == 6);
  CHECK(max_independent_set_exact(Hypergraph(10)).alpha == 10);

  SUBCASE("agrees with enumeration") {
    for (std::uint64_t s = 0; s < 60; ++s) {
      const std::size_t n = 8 + s % 11;
      const std::size_t k = 2 + s % 3;
      const Hypergraph h = brute::random_uniform(n, k, n + s % 17, s);
      const auto r = max_independent_set_exact(h);
      CHECK(r.alpha == brute::alpha(h));
      CHECK(validate(r.witness, h));
      CHECK(r.witness.vertices[0].size() == r.alpha);
    }
  }
  SUBCASE("budget") {
    const Hypergraph h = brute::random_uniform(40, 3, 120, 2);
    CHECK_THROWS_AS(max_independent_set_exact(h, 10), BudgetExceeded);
    CHECK_THROWS_AS(max_independent_set_exact(Hypergraph(70)), InputError);
  }
}

TEST_CASE("matching_number_exact") {
  CHECK(matching_number_exact(perfect_matching(12, 4)).size == 3);
  CHECK(matching_number_exact(sunflower(4, 2, 5)).size == 1);
  const Hypergraph two(10, {{0, 1, 2}, {0, 3, 4}, {5, 6, 7}, {5, 8, 9}});
  CHECK(matching_number_exact(two).size == 2);
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Hypergraph h = brute::random_uniform(14, 3, 14, s);
    const auto r = matching_number_exact(h);
    CHECK(r.size == brute::matching(h.edges()));
    CHECK(validate(r.witness, h));
    CHECK(r.size >= greedy_matching(h).edges.size());
  }
  CHECK(matching_number_exact(sunflower(3, 1, 4)).size == greedy_matching(sunflower(3, 1, 4)).edges.size());
}

TEST_CASE("contains_sunflower") {
  const Hypergraph s = sunflower(5, 2, 4);
  const auto w = contains_sunflower(s, 2, 4);
  REQUIRE(w.has_value());
  CHECK(w->vertices[0] == VertexSet{0, 1});
  CHECK(w->edge_values.size() == 4);
  const auto pair = contains_sunflower(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}), 2, 2);
  REQUIRE(pair.has_value());
  CHECK(pair->vertices[0] == VertexSet{0, 1});
  CHECK_FALSE(contains_sunflower(s, 2, 5).has_value());
  CHECK_FALSE(contains_sunflower(s, 1, 2).has_value());

  SUBCASE("agrees with definition") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Hypergraph h = brute::random_uniform(10, 3, 10 + seed % 7, seed);
      for (std::size_t core = 0; core <= 2; ++core)
        for (std::size_t petals = 2; petals <= 3; ++petals) {
          const auto got = contains_sunflower(h, core, petals);
          CHECK(got.has_value() == brute::has_sunflower(h, core, petals));
          if (got) CHECK(validate(*got, h));
        }
    }
  }
  SUBCASE("linearity equivalence") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Hypergraph h = brute::random_uniform(16, 4, 8, seed);
      bool any = false;
      for (std::size_t j = 2; j <= 3; ++j) any = any || contains_sunflower(h, j, 2).has_value();
      CHECK(any == !cycle_census(h).is_linear);
    }
    CHECK_FALSE(contains_sunflower(regular_linear(9, 3, 4, 0), 2, 2).has_value());
  }
}

TEST_CASE("omitting_check") {
  CHECK_FALSE(omitting_check(perfect_matching(9, 3), 1).has_value());
  const auto w = omitting_check(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}), 2);
  REQUIRE(w.has_value());
  CHECK(w->edges == std::vector<std::size_t>{0, 1});
  const Hypergraph l = l_construction(4, 3, 3);
  CHECK(omitting_check(l, 1).has_value() == contains_sunflower(l, 1, 2).has_value());
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Hypergraph h = brute::random_uniform(12, 4, 6, seed);
    for (std::size_t j = 0; j < 4; ++j) {
      const auto a = omitting_check(h, j);
      CHECK(a.has_value() == brute::has_pair_meeting_in(h, j));
      CHECK(a.has_value() == contains_sunflower(h, j, 2).has_value());
      if (a) CHECK(validate(*a, h));
    }
  }
}

TEST_CASE("contains_fan") {
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto w = contains_fan(fan(k));
    REQUIRE(w.has_value());
    CHECK(validate(*w, fan(k)));
    CHECK(w->edge_values.size() == k + 1);
  }
  CHECK_FALSE(contains_fan(l_construction(4, 3, 3)).has_value());
  CHECK_FALSE(contains_fan(sunflower(3, 1, 3)).has_value());
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Hypergraph h = brute::random_uniform(11, 3, 14 + seed % 10, seed);
    CHECK(contains_fan(h).has_value() == brute_fan(h));
  }
}

TEST_CASE("indecomposability_check") {
  CHECK(indecomposability_check(perfect_matching(6, 2), 2, 2).indecomposable);
  const auto v = indecomposability_check(sunflower(3, 2, 6), 2, 2, 3);
  CHECK_FALSE(v.indecomposable);
  CHECK(v.i0 == 1);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->vertices[0] == VertexSet{0, 1});
  CHECK(indecomposability_check(perfect_matching(12, 4), 2, 2).indecomposable);
  CHECK(indecomposability_check(sunflower(3, 2, 5), 2, 2, 3).indecomposable);
}

TEST_CASE("dlr_audit") {
  const DlrAudit pm = dlr_audit(perfect_matching(9, 3), 1.1, 0.1);
  CHECK(pm.all_ok);
  const DlrAudit k6 = dlr_audit(complete_hypergraph(6, 3), 1.0, 0.1);
  CHECK(k6.max_degree == 10);
  CHECK_FALSE(k6.degree_ok);
  CHECK_FALSE(k6.all_ok);
  const DlrAudit rl = dlr_audit(regular_linear(15, 3, 3, 0), 2.0, 0.2);
  CHECK(rl.max_degree == 3);
  CHECK(rl.degree_bound == doctest::Approx(4.0));
  CHECK(rl.degree_ok);
  REQUIRE(rl.cycles.size() == 1);
  CHECK(rl.cycles[0].j == 2);
  CHECK(rl.cycles[0].count == 0);
  CHECK(rl.all_ok);

  const Hypergraph h = brute::random_uniform(12, 4, 30, 1);
  bool passed = false;
  for (double t = 0.5; t < 20; t += 0.25) {
    const bool ok = dlr_audit(h, t, 0.1).degree_ok;
    CHECK((ok || !passed));
    passed = passed || ok;
  }
  CHECK(dlr_instantiated_t(100, 3, 4.0, 2) == doctest::Approx(2.0 * 10.0));
  CHECK(dlr_audit_instantiated(Hypergraph(5), 2.0, 2, 0.1).all_ok);
}

TEST_CASE("witness json round trip") {
  const Hypergraph f = fan(3);
  const Witness w = *contains_fan(f);
  const nlohmann::json j = w;
  const Witness back = j.get<Witness>();
  CHECK(validate(back, f));
  CHECK(back.edge_values == w.edge_values);
  Witness broken = back;
  broken.edge_values.pop_back();
  CHECK_FALSE(validate(broken, f));
  CHECK_THROWS_AS(require_valid(broken, f), VerificationError);
}
