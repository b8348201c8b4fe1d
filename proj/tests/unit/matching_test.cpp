#include "doctest.h"
#include "helpers.hpp"
#include "tightlab/error.hpp"
#include "tightlab/lp.hpp"
#include "tightlab/matching.hpp"
#include "tightlab/random.hpp"

using namespace tl;
using tl::test::from_mask;
using tl::test::graph;

TEST_SUITE("frac-matching") {
  TEST_CASE("simplex on a textbook program") {
    // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {3, 2};
    lp.rows = {{{{0, 1}, {1, 1}}, RowSense::kLessEqual, 4},
               {{{0, 1}, {1, 3}}, RowSense::kLessEqual, 6},
               {{{0, 1}}, RowSense::kLessEqual, 3}};
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.value == 11);
    CHECK(s.x[0] == 3);
    CHECK(s.x[1] == 1);
    // Duals certify the value: 4 y1 + 6 y2 + 3 y3 = 11.
    CHECK(4 * s.duals[0] + 6 * s.duals[1] + 3 * s.duals[2] == 11);
  }

  TEST_CASE("simplex detects infeasible and unbounded programs") {
    LinearProgram inf;
    inf.num_vars = 1;
    inf.objective = {1};
    inf.rows = {{{{0, 1}}, RowSense::kLessEqual, 1}, {{{0, 1}}, RowSense::kGreaterEqual, 2}};
    CHECK(solve_lp(inf).status == LpStatus::kInfeasible);
    LinearProgram unb;
    unb.num_vars = 2;
    unb.objective = {1, 0};
    unb.rows = {{{{0, 1}, {1, -1}}, RowSense::kLessEqual, 1}, {{{0, -1}, {1, 1}}, RowSense::kLessEqual, 1}};
    unb.rows.pop_back();
    unb.rows.push_back({{{1, 1}}, RowSense::kGreaterEqual, 0});
    CHECK(solve_lp(unb).status == LpStatus::kUnbounded);
  }

  TEST_CASE("simplex handles equality rows and negative right-hand sides") {
    // max x + y, x + y = 2, -x <= -1/2
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {1, 1};
    lp.rows = {{{{0, 1}, {1, 1}}, RowSense::kEqual, 2}, {{{0, -1}}, RowSense::kLessEqual, Rational(-1, 2)}};
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.value == 2);
    CHECK(s.x[0] >= Rational(1, 2));
  }

  TEST_CASE("fractional matching examples") {
    const Hypergraph one = graph(3, 3, {{0, 1, 2}});
    const FractionalMatching m1 = lp_matching(one, uniform_weighting(3));
    CHECK(m1.value == 1);
    CHECK(m1.weights[0] == 1);

    const Hypergraph c6 = gen_tight_cycle(6, 3);
    const FractionalMatching m2 = lp_matching(c6, uniform_weighting(6));
    CHECK(m2.value == 2);
    CHECK(check_matching_certificate(c6, uniform_weighting(6), m2).empty());
    std::vector<Rational> third(6, Rational(1, 3));
    FractionalMatching uniform{2, third, std::vector<Rational>(6, Rational(1, 3))};
    CHECK(check_matching_certificate(c6, uniform_weighting(6), uniform).empty());

    const Hypergraph none(4, 3, {});
    const FractionalMatching m3 = lp_matching(none, uniform_weighting(4));
    CHECK(m3.value == 0);
    CHECK(check_matching_certificate(none, uniform_weighting(4), m3).empty());
    CHECK(matching_density(m2, 6) == Rational(1, 3));
  }

  TEST_CASE("certificate checker rejects a bad pair") {
    const Hypergraph c6 = gen_tight_cycle(6, 3);
    FractionalMatching m = lp_matching(c6, uniform_weighting(6));
    m.value += 1;
    CHECK_FALSE(check_matching_certificate(c6, uniform_weighting(6), m).empty());
  }

  TEST_CASE("strong duality on random weighted instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Hypergraph h = gen_random(7, 3, Rational(2, 5), seed);
      VertexWeighting b(7);
      for (int v = 0; v < 7; ++v) b[v] = Rational(static_cast<long long>(counter_hash({seed, 1, static_cast<std::uint64_t>(v)}) % 7), 6);
      for (auto& x : b)
        if (x > 1) x = 1;
      const FractionalMatching m = lp_matching(h, b);
      CHECK(check_matching_certificate(h, b, m).empty());
    }
  }

  TEST_CASE("exact maximum matchings") {
    CHECK(max_matching_exact(gen_complete(6, 3)).size() == 2);
    CHECK(max_matching_exact(graph(5, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}})).size() == 1);
    CHECK(max_matching_exact(gen_tight_cycle(7, 3)).size() == 2);
    CHECK(max_matching_exact(Hypergraph(5, 3, {})).size() == 0);
  }

  TEST_CASE("exact matching agrees with brute force on small graphs") {
    for (std::uint64_t mask = 0; mask < 1024; mask += 11) {
      const Hypergraph h = from_mask(6, 2, mask * 29 % 32768);
      std::size_t best = 0;
      const auto& e = h.edges();
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << e.size()); ++pick) {
        VertexSet used = 0;
        std::size_t cnt = 0;
        bool ok = true;
        for (std::size_t i = 0; i < e.size() && ok; ++i)
          if ((pick >> i) & 1U) {
            ok = (used & e[i]) == 0;
            used |= e[i];
            ++cnt;
          }
        if (ok) best = std::max(best, cnt);
      }
      CHECK(max_matching_exact(h).size() == best);
    }
  }

  TEST_CASE("robust matchability") {
    const RobustReport one = is_robustly_matchable(graph(3, 3, {{0, 1, 2}}), Rational(1, 10));
    CHECK_FALSE(one.robust);
    REQUIRE(one.failing_weighting);
    CHECK(*one.failing_weighting == VertexWeighting{1, 1, Rational(9, 10)});
    CHECK(is_robustly_matchable(gen_complete(6, 3), Rational(1, 10)).robust);
    CHECK(is_robustly_matchable(gen_tight_cycle(6, 3), Rational(0)).robust);
    CHECK_THROWS_AS(is_robustly_matchable(gen_complete(17, 2), Rational(1, 10)), Error);
    RobustOptions opt;
    opt.allow_sampling = true;
    opt.samples = 8;
    const RobustReport sampled = is_robustly_matchable(gen_complete(17, 2), Rational(1, 10), opt);
    CHECK_FALSE(sampled.certified);
    CHECK(sampled.mode == "sampled, not certified");
  }

  TEST_CASE("lifting examples") {
    const LiftingReport k6 = verify_matching_lifting(gen_complete(6, 3), 1, 2, uniform_weighting(6));
    CHECK(k6.hypothesis);
    CHECK(k6.conclusion);
    const Hypergraph iso = graph(6, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    const LiftingReport r = verify_matching_lifting(iso, 1, Rational(1, 2), uniform_weighting(6));
    CHECK_FALSE(r.hypothesis);
    CHECK_FALSE(r.violated());
    CHECK_THROWS_AS(verify_matching_lifting(gen_complete(6, 3), 1, 3, uniform_weighting(6)), Error);
  }

  TEST_CASE("lifting with d = 2 needs the size condition") {
    // K_4^(3) inside many isolated vertices: every pair link has nu >= 2 in
    // the uniform weighting of the whole vertex set only if the size
    // condition is ignored; with it the hypothesis fails.
    const Hypergraph h(20, 3, gen_complete(4, 3).edges());
    const LiftingReport r = verify_matching_lifting(h, 2, 2, uniform_weighting(20));
    CHECK_FALSE(r.violated());
    CHECK(r.nu < 2);
  }

  TEST_CASE("lifting never fails on random instances") {
    int hypotheses = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Hypergraph h = gen_random(7, 3, Rational(3, 5), seed);
      const Rational m = Rational(static_cast<long long>(1 + seed % 4), 2);
      const LiftingReport r = verify_matching_lifting(h, 1 + static_cast<int>(seed % 2), m, uniform_weighting(7));
      CHECK_FALSE(r.violated());
      hypotheses += r.hypothesis ? 1 : 0;
    }
    CHECK(hypotheses > 0);
  }

  TEST_CASE("Frankl bound examples") {
    const BoundReport a = check_frankl_bound(gen_complete(7, 2), 3);
    CHECK(a.hypothesis);
    CHECK(a.conclusion);
    CHECK_FALSE(check_frankl_bound(graph(3, 3, {{0, 1, 2}}), 2).hypothesis);
    const BoundReport c = check_frankl_bound(gen_tight_cycle(9, 3), 2);
    CHECK_FALSE(c.hypothesis);
    CHECK(c.matching == 3);
  }

  TEST_CASE("Erdos-Gallai examples") {
    const BoundReport a = check_erdos_gallai(gen_complete(5, 2), 2);
    CHECK(a.hypothesis);
    CHECK(a.conclusion);
    const BoundReport b = check_erdos_gallai(Hypergraph(6, 2, gen_complete(5, 2).edges()), 3);
    CHECK_FALSE(b.hypothesis);
    CHECK(b.matching == 2);
    CHECK_FALSE(check_erdos_gallai(Hypergraph(4, 2, {}), 1).hypothesis);
  }

  TEST_CASE("Kruskal-Katona in Lovasz form") {
    const KruskalKatonaReport a = check_kruskal_katona(gen_complete(5, 3), 2);
    CHECK(a.holds);
    CHECK(a.x <= 5);
    CHECK(a.x > Rational(499, 100));
    CHECK(a.bound <= 10);
    CHECK(a.bound > Rational(99, 10));
    CHECK(a.shadow_edges == 10);
    const KruskalKatonaReport b = check_kruskal_katona(graph(5, 3, {{0, 1, 2}}), 2);
    CHECK(b.holds);
    CHECK(b.bound <= 3);
    CHECK(b.bound > Rational(29, 10));
    for (std::uint64_t mask = 0; mask < 1024; mask += 5) CHECK(check_kruskal_katona(from_mask(5, 3, mask), 2).holds);
  }
}
