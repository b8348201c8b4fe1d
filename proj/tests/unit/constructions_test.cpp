#include "doctest.h"
#include "helpers.hpp"
#include "tightlab/constructions.hpp"
#include "tightlab/error.hpp"

using namespace tl;

TEST_SUITE("constructions-experiments") {
  TEST_CASE("space barrier shape and example") {
    const SpaceBarrierShape s = space_barrier_shape(9, 3, 1);
    CHECK(s.ell == 2);
    CHECK(s.x_size == 3);
    CHECK(s.j == 1);
    CHECK(s.deviation == 0);
    const Hypergraph h = gen_space_barrier(9, 3, 1);
    CHECK(h.edge_count() == 39);
    CHECK(degree_stats(h, 1).min_relative_degree == Rational(13, 28));
    CHECK(space_barrier_min_degree(9, 3, 1) == Rational(13, 28));
    const SpaceBarrierShape r = space_barrier_shape(10, 3, 1);
    CHECK(r.x_size == 3);
    CHECK(r.deviation == Rational(-1, 3));
  }

  TEST_CASE("space barrier rejects bad parameters") {
    CHECK_THROWS_AS(gen_space_barrier(9, 3, 2), Error);
    CHECK_THROWS_AS(gen_space_barrier(5, 3, 1), Error);
    CHECK_NOTHROW(gen_space_barrier(9, 3, 2, true));
    CHECK(space_barrier_shape(9, 3, 2, true).j == 1);
  }

  TEST_CASE("no edge meets X in exactly j vertices") {
    for (int k = 3; k <= 5; ++k)
      for (int d = 1; d <= k - 2; ++d)
        for (int n = 2 * k; n <= 13; ++n) {
          const SpaceBarrierShape s = space_barrier_shape(n, k, d);
          const VertexSet x = full_set(s.x_size);
          for (VertexSet e : gen_space_barrier(n, k, d).edges()) CHECK(set_size(e & x) != s.j);
        }
  }

  TEST_CASE("closed-form degree matches enumeration") {
    for (int k = 3; k <= 5; ++k)
      for (int d = 1; d <= k - 2; ++d)
        for (int n = 2 * k; n <= 13; ++n)
          CHECK(space_barrier_min_degree(n, k, d) == degree_stats(gen_space_barrier(n, k, d), d).min_relative_degree);
    CHECK(space_barrier_min_degree(10, 3, 2, true) ==
          degree_stats(gen_space_barrier(10, 3, 2, true), 2).min_relative_degree);
  }

  TEST_CASE("limits of the construction") {
    CHECK(space_barrier_limit(3, 1) == Rational(5, 9));
    CHECK(space_barrier_limit(4, 1) == Rational(5, 8));
    CHECK(space_barrier_limit(5, 1) == Rational(409, 625));
    CHECK(space_barrier_limit(3, 2) == Rational(1, 2));
    for (int l = 1; l <= 6; ++l) {
      const Rational lim = space_barrier_limit(l + 1, 1);
      const Rational fin = space_barrier_min_degree(1000 * (l + 1), l + 1, 1, l == 1);
      const Rational gap = lim > fin ? lim - fin : fin - lim;
      CHECK(gap < Rational(1, 100));
    }
  }

  TEST_CASE("finite degree approaches 5/9 from below") {
    // Monotone along n divisible by 3, where |X| = n / 3 has no rounding.
    Rational prev = 0;
    for (int n = 9; n <= 300; n += 3) {
      const Rational v = space_barrier_min_degree(n, 3, 1);
      CHECK(v >= prev);
      prev = v;
    }
    CHECK(Rational(5, 9) - prev < Rational(1, 100));
    for (int n = 9; n <= 300; ++n) CHECK(space_barrier_min_degree(n, 3, 1) < Rational(5, 9));
  }

  TEST_CASE("rounding of X breaks monotonicity at n = 10") {
    CHECK(space_barrier_min_degree(10, 3, 1) == Rational(5, 12));
    CHECK(space_barrier_min_degree(10, 3, 1) < space_barrier_min_degree(9, 3, 1));
  }

  TEST_CASE("threshold tables") {
    const ThresholdTable t = threshold_formulas(3, 1);
    CHECK(t.upper_linear == Rational(3, 4));
    CHECK(t.lower_construction == Rational(5, 9));
    REQUIRE(t.known_exact);
    CHECK(*t.known_exact == Rational(5, 9));
    CHECK(t.upper_general.compare(Rational(7, 10)) < 0);
    CHECK(t.upper_general.compare(Rational(71, 100)) > 0);
    CHECK(threshold_formulas(4, 2).known_exact == Rational(5, 9));
    const ThresholdTable f = threshold_formulas(5, 2);
    CHECK(f.lower_construction == Rational(5, 8));
    CHECK(f.upper_linear == Rational(5, 6));
    CHECK_FALSE(f.known_exact);
    CHECK(threshold_formulas(5, 1).lower_construction == Rational(408, 625));
    CHECK(threshold_formulas(5, 4).known_exact == Rational(1, 2));
    CHECK_THROWS_AS(threshold_formulas(3, 3), Error);
  }

  TEST_CASE("table ordering for every k up to 8") {
    for (int k = 2; k <= 8; ++k)
      for (int d = 1; d < k; ++d) {
        CAPTURE(k);
        CAPTURE(d);
        CHECK(check_threshold_ordering(threshold_formulas(k, d)) == "");
      }
    ThresholdTable bad = threshold_formulas(3, 1);
    bad.lower_construction = Rational(3, 4);
    CHECK_FALSE(check_threshold_ordering(bad).empty());
  }

  TEST_CASE("random graphs with a minimum degree") {
    CHECK(gen_random_min_degree(8, 3, 1, Rational(1), 4) == gen_complete(8, 3));
    CHECK(gen_random_min_degree(8, 3, 1, Rational(0), 4) == gen_random(8, 3, Rational(0), 4));
    CHECK(gen_random_min_degree(9, 3, 2, Rational(0), 6).empty());
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Hypergraph h = gen_random_min_degree(12, 3, 1, Rational(3, 5), seed);
      CHECK(degree_stats(h, 1).min_relative_degree >= Rational(3, 5));
      CHECK(is_subgraph(gen_random(12, 3, Rational(3, 5), seed), h));
    }
  }

  TEST_CASE("scan determinism and complete column") {
    ScanConfig cfg;
    cfg.n_list = {6, 7};
    cfg.grid = {Rational(0), Rational(1, 2), Rational(1)};
    cfg.trials = 4;
    cfg.seed = 9;
    cfg.anchors = true;
    const ScanResult a = scan_threshold(cfg);
    const ScanResult b = scan_threshold(cfg);
    CHECK(scan_rows_csv(a) == scan_rows_csv(b));
    CHECK(scan_cells_csv(a) == scan_cells_csv(b));
    CHECK(scan_rows_csv(a).rfind("# tightlab-scan v1\n", 0) == 0);
    REQUIRE(a.cells.size() == 6);
    CHECK(a.cells[2].rate == 1);
    CHECK(a.cells[5].rate == 1);
    CHECK(a.cells[0].rate == 0);
    std::size_t anchors = 0;
    for (const ScanRow& r : a.rows) anchors += r.kind == "space-barrier" ? 1 : 0;
    CHECK(anchors == 2);
    CHECK(trial_seed(9, 6, Rational(1, 2), 0) != trial_seed(10, 6, Rational(1, 2), 0));
    CHECK(trial_seed(9, 6, Rational(1, 2), 0) != trial_seed(9, 6, Rational(1, 3), 0));
  }

  TEST_CASE("scan guards") {
    ScanConfig cfg;
    cfg.n_list = {15};
    cfg.grid = {Rational(1)};
    cfg.trials = 1;
    CHECK_THROWS_AS(scan_threshold(cfg), Error);
    cfg.n_list = {8};
    cfg.grid = {Rational(3, 2)};
    CHECK_THROWS_AS(scan_threshold(cfg), Error);
  }

  TEST_CASE("eg scan on complete graphs") {
    EgConfig cfg;
    cfg.ell = 2;
    cfg.n = 9;
    cfg.grid = {Rational(1)};
    cfg.trials = 2;
    const EgResult r = eg_scan(cfg);
    REQUIRE(!r.rows.empty());
    for (const EgRow& row : r.rows) {
      CHECK(row.components == 1);
      CHECK(row.edge_density == 1);
      CHECK(row.nu == Rational(9, 2));
      CHECK(row.matching_margin == Rational(1, 6));
      CHECK(row.density_margin == Rational(5, 9));
    }
    CHECK(eg_rows_csv(r) == eg_rows_csv(eg_scan(cfg)));
    cfg.ell = 4;
    CHECK_THROWS_AS(eg_scan(cfg), Error);
  }
}
