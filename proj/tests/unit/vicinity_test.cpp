#include "doctest.h"
#include "helpers.hpp"
#include "tightlab/error.hpp"
#include "tightlab/vicinity.hpp"

using namespace tl;
using tl::test::graph;
using tl::test::set_of;

namespace {

CheckStatus status_of(const PropertyReport& r, const std::string& name) { return r.get(name).status; }

}  // namespace

TEST_SUITE("vicinity-framework") {
  TEST_CASE("max-ratio selection prefers the denser component") {
    // Link of vertex 0 has a triangle {1,2,3} and a path 4-5-6.
    const Hypergraph r = graph(7, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {0, 4, 5}, {0, 5, 6}});
    const Selection s = select_vicinity(r, 1, SelectionStrategy::kMaxRatio);
    const Hypergraph* c0 = s.vicinity.find(set_of({0}));
    REQUIRE(c0 != nullptr);
    CHECK(*c0 == graph(7, 2, {{1, 2}, {1, 3}, {2, 3}}));
    for (const SelectionRecord& rec : s.records) CHECK(ratio_certificate_holds(rec));
    CHECK(check_vicinity(r, s.vicinity).empty());
  }

  TEST_CASE("max-edges selection and tie breaking") {
    const Hypergraph r = graph(7, 3, {{0, 1, 2}, {0, 2, 3}, {0, 4, 5}, {0, 5, 6}});
    const Selection s = select_vicinity(r, 1, SelectionStrategy::kMaxEdges);
    CHECK(*s.vicinity.find(set_of({0})) == graph(7, 2, {{1, 2}, {2, 3}}));
  }

  TEST_CASE("selection certificate on random link graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Hypergraph r = gen_random(8, 3, Rational(1, 4), seed);
      const Selection s = select_vicinity(r, 1, SelectionStrategy::kMaxRatio);
      for (const SelectionRecord& rec : s.records) CHECK(ratio_certificate_holds(rec));
      CHECK(check_vicinity(r, s.vicinity).empty());
    }
  }

  TEST_CASE("generated graph lies inside the host") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Hypergraph r = gen_random(9, 3, Rational(1, 2), seed);
      for (int d = 1; d <= 2; ++d) {
        const Selection s = select_vicinity(r, d, SelectionStrategy::kMaxEdges);
        CHECK(is_subgraph(generate_graph(s.vicinity), r));
      }
    }
    const Selection full = select_vicinity(gen_complete(6, 3), 1, SelectionStrategy::kMaxEdges);
    CHECK(generate_graph(full.vicinity) == gen_complete(6, 3));
  }

  TEST_CASE("check_vicinity rejects wrong keys and foreign members") {
    const Hypergraph r = gen_complete(5, 3);
    Vicinity v = select_vicinity(r, 1, SelectionStrategy::kMaxEdges).vicinity;
    Vicinity missing = v;
    missing.keys.pop_back();
    missing.members.pop_back();
    CHECK_FALSE(check_vicinity(r, missing).empty());
    const Hypergraph sparse = graph(5, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {1, 2, 3}});
    CHECK_FALSE(check_vicinity(sparse, v).empty());
  }

  TEST_CASE("vicinity JSON round trip") {
    const Vicinity v = select_vicinity(gen_random(8, 3, Rational(1, 2), 3), 1, SelectionStrategy::kMaxEdges).vicinity;
    const Vicinity w = vicinity_from_json(vicinity_to_json(v), 8, 3);
    CHECK(w.keys == v.keys);
    CHECK(w.members == v.members);
  }

  TEST_CASE("switcher witnesses") {
    const Hypergraph k4 = gen_complete(4, 2);
    CHECK(switcher_witness(k4, set_of({0, 1}), 0, 1) == 2);
    const Hypergraph path = graph(4, 2, {{0, 1}, {1, 2}});
    CHECK(switcher_witness(path, set_of({0, 1}), 0, 1) == -1);
    CHECK_FALSE(find_switcher(path));
    CHECK(find_switcher(graph(3, 2, {{0, 1}, {1, 2}, {0, 2}})));
  }

  TEST_CASE("arcs in the vicinity of a complete graph") {
    const Vicinity v = select_vicinity(gen_complete(6, 3), 1, SelectionStrategy::kMaxEdges).vicinity;
    const ArcSearch a = find_arc(v);
    REQUIRE(a.arc);
    CHECK(a.arc->tuple.size() == 4);
    CHECK(check_arc(v, *a.arc).empty());
    Arc bad = *a.arc;
    bad.tuple[1] = bad.tuple[0];
    CHECK_FALSE(check_arc(v, bad).empty());
  }

  TEST_CASE("vicinity properties of a complete graph") {
    const Hypergraph r = gen_complete(8, 3);
    const Vicinity v = select_vicinity(r, 1, SelectionStrategy::kMaxEdges).vicinity;
    const PropertyReport rep = verify_hamilton_vicinity(r, v, Rational(1, 10), Rational(1, 2));
    CHECK(rep.passed());
    for (const char* name : {"V1", "V2", "V3", "V4", "V5"}) CHECK(status_of(rep, name) == CheckStatus::kPass);
  }

  TEST_CASE("V5 fails when delta is too small") {
    const Hypergraph r = gen_random(8, 3, Rational(1, 2), 9);
    const Vicinity v = select_vicinity(r, 1, SelectionStrategy::kMaxEdges).vicinity;
    const PropertyReport rep = verify_hamilton_vicinity(r, v, Rational(1, 10), Rational(1, 100));
    CHECK(status_of(rep, "V5") == CheckStatus::kFail);
    CHECK_FALSE(rep.passed());
  }

  TEST_CASE("V1 fails on a disconnected link") {
    const Hypergraph r = graph(7, 3, {{0, 1, 2}, {0, 4, 5}});
    Vicinity v = select_vicinity(r, 1, SelectionStrategy::kMaxEdges).vicinity;
    for (std::size_t i = 0; i < v.keys.size(); ++i)
      if (v.keys[i] == set_of({0})) v.members[i] = link(r, set_of({0}));
    CHECK(check_vicinity(r, v).empty());
    CHECK(status_of(verify_hamilton_vicinity(r, v, Rational(1, 100), Rational(1, 2)), "V1") == CheckStatus::kFail);
  }

  TEST_CASE("framework properties of a complete graph") {
    const Hypergraph k = gen_complete(7, 3);
    const PropertyReport rep = verify_framework(k, k, Rational(1, 100), Rational(1, 10), Rational(1, 2));
    CHECK(rep.passed());
    CHECK(status_of(rep, "F3") == CheckStatus::kPass);
  }

  TEST_CASE("framework failures are reported with witnesses") {
    const Hypergraph host = gen_complete(9, 3);
    const Hypergraph cyc = gen_tight_cycle(9, 3);
    const PropertyReport rep = verify_framework(host, cyc, Rational(1, 100), Rational(1, 10), Rational(1, 2));
    CHECK(status_of(rep, "F1") == CheckStatus::kPass);
    CHECK(status_of(rep, "F2") == CheckStatus::kPass);
    CHECK(status_of(rep, "F3") == CheckStatus::kFail);
    CHECK(status_of(rep, "F5") == CheckStatus::kFail);

    const Hypergraph two = graph(9, 3, {{0, 1, 2}, {3, 4, 5}});
    const PropertyReport r2 = verify_framework(host, two, Rational(1, 2), Rational(1, 100), Rational(1, 2));
    CHECK(status_of(r2, "F2") == CheckStatus::kFail);
    CHECK(status_of(r2, "F1") == CheckStatus::kPass);
    const PropertyReport r3 = verify_framework(host, two, Rational(1, 100), Rational(1, 100), Rational(1, 2));
    CHECK(status_of(r3, "F1") == CheckStatus::kFail);
  }

  TEST_CASE("perturbed minimum degree") {
    CHECK(verify_perturbed_degree(gen_complete(7, 3), 2, Rational(1, 10), Rational(1)).passed());
    const PropertyReport rep = verify_perturbed_degree(gen_tight_cycle(7, 3), 1, Rational(1, 10), Rational(1, 2));
    CHECK(status_of(rep, "P1") == CheckStatus::kFail);
    const Hypergraph one = graph(6, 3, {{0, 1, 2}});
    CHECK(status_of(verify_perturbed_degree(one, 1, Rational(1, 10), Rational(1, 10)), "P2") == CheckStatus::kFail);
  }

  TEST_CASE("support restriction") {
    const Hypergraph h = graph(8, 3, {{1, 3, 5}, {3, 5, 7}});
    const Hypergraph r = restrict_to_support(h);
    CHECK(r.n() == 4);
    CHECK(r == graph(4, 3, {{0, 1, 2}, {1, 2, 3}}));
  }

  TEST_CASE("unknown property names throw") {
    const PropertyReport rep = verify_perturbed_degree(gen_complete(5, 3), 1, Rational(0), Rational(1));
    CHECK_THROWS_AS(rep.get("Q9"), Error);
  }
}
