#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tightlab/error.hpp"
#include "tightlab/tight.hpp"
#include "tightlab/vicinity.hpp"

using namespace tl;
using tl::test::from_mask;
using tl::test::graph;
using tl::test::set_of;

namespace {

// All tight walks (as vertex sequences) of exactly `len` vertices.
void all_walks(const Hypergraph& h, std::size_t len, std::vector<Vertex>& cur,
               std::vector<std::vector<Vertex>>& out) {
  const int k = h.k();
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (Vertex v = 0; v < h.n(); ++v) {
    cur.push_back(v);
    bool ok = true;
    if (static_cast<int>(cur.size()) >= k) {
      VertexSet s = 0;
      for (std::size_t i = cur.size() - k; i < cur.size(); ++i) s |= singleton(cur[i]);
      ok = set_size(s) == k && h.contains(s);
    }
    if (ok) all_walks(h, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_SUITE("tight-structure") {
  TEST_CASE("walk validation") {
    CHECK(validate_walk(gen_tight_cycle(5, 3), {0, 1, 2, 3, 4}, true).length() == 5);
    CHECK(check_walk(gen_complete(4, 3), {0, 1, 2, 0, 1, 3}, false).ok);
    const WalkDiagnostic bad = check_walk(graph(4, 3, {{0, 1, 2}}), {0, 1, 2, 3}, false);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failing_window == 1);
    CHECK_THROWS_AS(validate_walk(graph(4, 3, {{0, 1, 2}}), {0, 1, 2, 3}, false), Error);
    CHECK_FALSE(check_walk(gen_complete(4, 3), {0, 1, 2}, true).ok);
    CHECK_FALSE(check_walk(gen_complete(4, 3), {0, 1, 1, 2}, false).ok);
  }

  TEST_CASE("component examples") {
    CHECK(tight_components(graph(5, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}})).count() == 1);
    CHECK(tight_components(graph(5, 3, {{0, 1, 2}, {0, 3, 4}})).count() == 2);
    const ComponentPartition p = tight_components(graph(6, 2, {{0, 1}, {1, 2}, {3, 4}}));
    CHECK(p.count() == 2);
    CHECK(p.summaries[0].edge_count == 2);
    CHECK(p.summaries[0].span == set_of({0, 1, 2}));
    CHECK(p.summaries[1].shadow_edge_count == 2);
    CHECK(tight_components(Hypergraph(5, 3, {})).count() == 0);
  }

  TEST_CASE("co-walk oracle examples") {
    const Hypergraph h = graph(4, 3, {{0, 1, 2}, {1, 2, 3}});
    CHECK(co_walk_oracle(h, set_of({0, 1, 2}), set_of({1, 2, 3})));
    CHECK_FALSE(co_walk_oracle(graph(5, 3, {{0, 1, 2}, {0, 3, 4}}), set_of({0, 1, 2}), set_of({0, 3, 4})));
    CHECK(co_walk_oracle(h, set_of({0, 1, 2}), set_of({0, 1, 2})));
  }

  TEST_CASE("union-find components match the walk oracle on sampled 3-graphs on five vertices") {
    for (std::uint64_t mask = 0; mask < 1024; mask += 13) {
      const Hypergraph h = from_mask(5, 3, mask);
      const ComponentPartition p = tight_components(h);
      const auto& e = h.edges();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
          CHECK((p.component_of[i] == p.component_of[j]) == co_walk_oracle(h, e[i], e[j]));
    }
  }

  TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(gen_complete(4, 3)));
    CHECK_FALSE(is_strongly_connected(gen_tight_cycle(7, 3)));
    CHECK(is_strongly_connected(graph(5, 2, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK_THROWS_AS(is_strongly_connected(gen_complete(12, 3), 100), Error);
  }

  TEST_CASE("walks between directed edges") {
    const auto w = find_tight_walk(gen_complete(4, 3), {0, 1, 2}, {1, 2, 3});
    REQUIRE(w);
    CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_FALSE(find_tight_walk(gen_tight_cycle(7, 3), {0, 1, 2}, {2, 1, 0}));
    const auto r = find_tight_walk(gen_complete(5, 3), {0, 1, 2}, {0, 1, 2}, 1);
    REQUIRE(r);
    CHECK(r->length() % 3 == 1);
    CHECK(check_walk(gen_complete(5, 3), r->vertices, false).ok);
  }

  TEST_CASE("residue search is complete against brute force up to length 3k") {
    for (std::uint64_t mask = 1; mask < 1024; mask += 37) {
      const Hypergraph h = from_mask(5, 3, mask);
      if (h.empty()) continue;
      const std::vector<Vertex> from = members(h.edges().front());
      for (int residue = 0; residue < 3; ++residue) {
        std::set<std::vector<Vertex>> reachable_ends;
        for (std::size_t len = 3; len <= 9; ++len) {
          if (static_cast<int>(len % 3) != residue) continue;
          std::vector<Vertex> cur = from;
          std::vector<std::vector<Vertex>> walks;
          all_walks(h, len, cur, walks);
          for (const auto& wk : walks) reachable_ends.insert({wk.end() - 3, wk.end()});
        }
        for (const auto& to : reachable_ends) {
          const auto got = find_tight_walk(h, from, to, residue);
          REQUIRE(got);
          CHECK(static_cast<int>(got->length() % 3) == residue);
          CHECK(got->length() <= 9);
        }
      }
    }
  }

  TEST_CASE("closed walks by residue") {
    const ClosedWalkSearch c = find_closed_walk(gen_complete(5, 3), 1);
    REQUIRE(c.walk);
    CHECK(c.walk->closed);
    CHECK(c.walk->length() % 3 == 1);
    CHECK(check_walk(gen_complete(5, 3), c.walk->vertices, true).ok);
    const ClosedWalkSearch none = find_closed_walk(gen_tight_cycle(9, 3), 1);
    CHECK_FALSE(none.walk);
    for (const StrongComponentInfo& s : none.components) CHECK(s.period % 3 == 0);
    const ClosedWalkSearch zero = find_closed_walk(gen_tight_cycle(9, 3), 0);
    REQUIRE(zero.walk);
    CHECK(zero.walk->length() % 3 == 0);
    CHECK(check_walk(gen_tight_cycle(9, 3), zero.walk->vertices, true).ok);
  }

  TEST_CASE("switcher loops") {
    const Hypergraph k4 = gen_complete(4, 3);
    const auto sw = find_switcher(k4);
    REQUIRE(sw);
    CHECK(check_switcher(k4, *sw).empty());
    const TightWalk loop = switcher_loop(k4, *sw);
    CHECK(loop.length() == 8);
    CHECK(check_walk(k4, loop.vertices, true).ok);

    const Hypergraph tri = graph(3, 2, {{0, 1}, {1, 2}, {0, 2}});
    const auto sw2 = find_switcher(tri);
    REQUIRE(sw2);
    const TightWalk t = switcher_loop(tri, *sw2);
    CHECK(t.length() == 3);
    CHECK(check_walk(tri, t.vertices, true).ok);

    const Hypergraph k5 = gen_complete(5, 3);
    const auto sw3 = find_switcher(k5);
    REQUIRE(sw3);
    const TightWalk l3 = switcher_loop(k5, *sw3);
    CHECK(l3.length() == 8);
    CHECK(l3.length() % 3 == 2);

    const Hypergraph k54 = gen_complete(6, 4);
    const auto sw4 = find_switcher(k54);
    REQUIRE(sw4);
    const TightWalk l4 = switcher_loop(k54, *sw4);
    CHECK(l4.length() == 15);
    CHECK(check_walk(k54, l4.vertices, true).ok);

    const Hypergraph one = graph(3, 1, {{1}});
    const auto sw1 = find_switcher(one);
    REQUIRE(sw1);
    const TightWalk l1 = switcher_loop(one, *sw1);
    CHECK(check_walk(one, l1.vertices, true).ok);
  }

  TEST_CASE("corrupted switcher is rejected") {
    const Hypergraph k4 = gen_complete(4, 3);
    Switcher sw = *find_switcher(k4);
    sw.witnesses[0].second = sw.witnesses[0].first;
    CHECK_FALSE(check_switcher(k4, sw).empty());
    CHECK_THROWS_AS(switcher_loop(k4, sw), Error);
  }

  TEST_CASE("shortening keeps the residue") {
    const Hypergraph c5 = gen_tight_cycle(5, 3);
    std::vector<Vertex> seq;
    for (int rep = 0; rep < 4; ++rep)
      for (int v = 0; v < 5; ++v) seq.push_back(v);
    const TightWalk w = validate_walk(c5, seq, true);
    const ShortenResult s = shorten_walk_mod_k(c5, w);
    CHECK(s.walk.length() % 3 == 20 % 3);
    CHECK(s.walk.length() < 20);
    CHECK(check_walk(c5, s.walk.vertices, true).ok);

    const TightWalk minimal = validate_walk(c5, {0, 1, 2, 3, 4}, true);
    CHECK(shorten_walk_mod_k(c5, minimal).walk == minimal);
    CHECK(shorten_walk_mod_k(c5, minimal).excisions.empty());
  }

  TEST_CASE("a single repeated tuple at distance k is excised once") {
    const Hypergraph k5 = gen_complete(5, 3);
    const TightWalk w = validate_walk(k5, {0, 1, 2, 0, 1, 2, 3, 4}, true);
    const ShortenResult s = shorten_walk_mod_k(k5, w);
    CHECK(s.walk.length() == w.length() - 3);
    REQUIRE(s.excisions.size() == 1);
    CHECK(s.excisions[0].second - s.excisions[0].first == 3);
  }
}
