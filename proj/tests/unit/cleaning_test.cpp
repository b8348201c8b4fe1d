#include "doctest.h"
#include "helpers.hpp"
#include "tightlab/cleaning.hpp"
#include "tightlab/error.hpp"
#include "tightlab/vicinity.hpp"

using namespace tl;
using tl::test::set_of;

namespace {

// All triples of {0..n-1} through vertex 0.
Hypergraph star(int n) {
  std::vector<VertexSet> e;
  for (VertexSet s : subsets_lex(n, 3))
    if (has_vertex(s, 0)) e.push_back(s);
  return Hypergraph(n, 3, std::move(e));
}

}  // namespace

TEST_SUITE("degree-cleaning") {
  TEST_CASE("gradation of an empty and of a complete graph") {
    const Gradation e = gradation(Hypergraph(8, 3, {}), Rational(1, 4));
    for (int j = 1; j <= 3; ++j) CHECK(e.level(j).empty());
    const Gradation f = gradation(gen_complete(6, 3), Rational(1));
    CHECK(f.level(2) == gen_complete(6, 2));
    CHECK(f.level(1) == gen_complete(6, 1));
  }

  TEST_CASE("gradation of a star keeps the centre") {
    const Gradation g = gradation(star(6), Rational(1, 2));
    CHECK(g.level(1) == Hypergraph(6, 1, {set_of({0})}));
    CHECK(g.level(2).edge_count() == 5);
    CHECK(check_gradation_sizes(g).empty());
    CHECK(check_gradation_degrees(g).empty());
  }

  TEST_CASE("root thresholds are compared exactly") {
    // Pair degree ratio 1/4: (1/4)^2 = 1/16 reaches beta = 1/16 but not 1/15.
    const Hypergraph i(6, 3, {set_of({0, 1, 2})});
    CHECK(gradation(i, Rational(1, 16), 2).level(2).edge_count() == 3);
    CHECK(gradation(i, Rational(1, 15), 2).level(2).empty());
    CHECK_THROWS_AS(check_gradation_sizes(gradation(i, Rational(1, 16), 2)), Error);
  }

  TEST_CASE("gradation bounds on random sparse graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Rational beta(1 + static_cast<long long>(seed % 3), 4);
      const Hypergraph i = gen_random(10, 3, Rational(1, 40), seed);
      const Gradation g = gradation(i, beta);
      CHECK(check_gradation_sizes(g).empty());
      CHECK(check_gradation_degrees(g).empty());
      for (int j = 1; j < 3; ++j) CHECK(is_subgraph(g.level(j), shadow(i, j)));
    }
  }

  TEST_CASE("cleaning a complete graph against a star") {
    const CleaningResult c = clean(gen_complete(6, 3), star(6), 1, Rational(1, 2));
    CHECK(c.f == star(6));
    CHECK(c.r_clean == complement(star(6)));
    CHECK(c.delta_out == Rational(3, 5));
    CHECK(c.max_complement_density == Rational(1, 6));
    CHECK(c.max_complement_ratio == Rational(1, 6));
    CHECK(c.alpha_star == Rational(1, 3));
    CHECK(c.shadow_covers_complement);
    CHECK(verify_perturbed_degree(c.r_clean, 1, c.alpha_star, c.delta_out).passed());
  }

  TEST_CASE("cleaning with empty I removes nothing") {
    const Hypergraph r = gen_random(9, 3, Rational(2, 3), 4);
    const CleaningResult c = clean(r, Hypergraph(9, 3, {}), 2, Rational(1, 4));
    CHECK(c.r_clean == r);
    CHECK(c.f.empty());
    CHECK(c.delta_out == degree_stats(r, 2).min_relative_degree);
  }

  TEST_CASE("cleaned graphs avoid I and pass the perturbed degree check") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Hypergraph r = gen_random(10, 3, Rational(3, 4), seed);
      const Hypergraph i = gen_random(10, 3, Rational(1, 60), seed + 100);
      const CleaningResult c = clean(r, i, 1 + static_cast<int>(seed % 2), Rational(1, 4));
      CHECK(is_subgraph(c.r_clean, r));
      for (VertexSet e : i.edges()) CHECK_FALSE(c.r_clean.contains(e));
      for (VertexSet e : c.f.edges()) CHECK_FALSE(c.r_clean.contains(e));
      CHECK(verify_perturbed_degree(c.r_clean, 1 + static_cast<int>(seed % 2), c.alpha_star, c.delta_out).passed());
    }
  }

  TEST_CASE("cleaning rejects bad arguments") {
    CHECK_THROWS_AS(clean(gen_complete(6, 3), Hypergraph(7, 3, {}), 1, Rational(1, 4)), Error);
    CHECK_THROWS_AS(clean(gen_complete(6, 3), Hypergraph(6, 3, {}), 3, Rational(1, 4)), Error);
    CHECK_THROWS_AS(clean(gen_complete(6, 3), Hypergraph(6, 3, {}), 1, Rational(0)), Error);
    CHECK_THROWS_AS(degree_perturbation(gen_complete(6, 3), Hypergraph(6, 3, {}), 0, Rational(1, 4)), Error);
  }

  TEST_CASE("degree perturbation collects edges through heavy sets") {
    const Hypergraph f = degree_perturbation(gen_complete(6, 3), star(6), 1, Rational(1, 2));
    CHECK(f == star(6));
    CHECK_FALSE(degree_perturbation(gen_complete(6, 3), star(6), 1, Rational(1)).empty());
    const Hypergraph one(6, 3, {set_of({0, 1, 2})});
    CHECK(degree_perturbation(gen_complete(6, 3), one, 2, Rational(1, 2)).empty());
  }
}
