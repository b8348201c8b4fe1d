#include <algorithm>
#include <functional>
#include <set>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "tightlab/constructions.hpp"
#include "tightlab/error.hpp"
#include "tightlab/hamilton.hpp"
#include "tightlab/random.hpp"

using namespace tl;
using tl::test::graph;

namespace {

// Tries every cyclic order of the vertices.
bool naive_hamiltonian(const Hypergraph& h) {
  std::vector<Vertex> order(static_cast<std::size_t>(h.n()));
  std::iota(order.begin(), order.end(), 0);
  do {
    if (check_walk(h, order, true).ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

// Depth-first search over states (visited set, last k - 1 vertices) with
// memoisation, one run per ordered prefix of k - 1 vertices starting at 0.
bool state_hamiltonian(const Hypergraph& h) {
  const int n = h.n(), k = h.k();
  bool found = false;
  std::vector<Vertex> prefix{0};
  std::function<void()> each_prefix;
  std::function<bool(VertexSet, std::vector<Vertex>&)> extend;
  std::set<std::pair<VertexSet, std::vector<Vertex>>> dead;
  auto window_ok = [&](const std::vector<Vertex>& w) {
    VertexSet s = 0;
    for (Vertex v : w) s |= singleton(v);
    return set_size(s) == k && h.contains(s);
  };
  extend = [&](VertexSet used, std::vector<Vertex>& tail) -> bool {
    if (used == full_set(n)) {
      std::vector<Vertex> wrap = tail;
      wrap.insert(wrap.end(), prefix.begin(), prefix.end());
      for (std::size_t i = 0; i + k <= wrap.size(); ++i)
        if (!window_ok({wrap.begin() + static_cast<long>(i), wrap.begin() + static_cast<long>(i) + k})) return false;
      return true;
    }
    if (dead.count({used, tail})) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (has_vertex(used, v)) continue;
      std::vector<Vertex> w = tail;
      w.push_back(v);
      if (!window_ok(w)) continue;
      std::vector<Vertex> next(w.begin() + 1, w.end());
      if (extend(used | singleton(v), next)) return true;
    }
    dead.insert({used, tail});
    return false;
  };
  each_prefix = [&] {
    if (found) return;
    if (static_cast<int>(prefix.size()) == k - 1) {
      dead.clear();
      VertexSet used = 0;
      for (Vertex v : prefix) used |= singleton(v);
      std::vector<Vertex> tail = prefix;
      found = extend(used, tail);
      return;
    }
    for (Vertex v = 1; v < n && !found; ++v) {
      if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) continue;
      prefix.push_back(v);
      each_prefix();
      prefix.pop_back();
    }
  };
  each_prefix();
  return found;
}

}  // namespace

TEST_SUITE("hamilton-oracle") {
  TEST_CASE("small examples") {
    const HamiltonResult k4 = find_tight_hamilton(gen_complete(4, 3));
    CHECK(k4.outcome == SearchOutcome::kFound);
    REQUIRE(k4.cycle);
    CHECK(k4.cycle->length() == 4);
    const HamiltonResult c7 = find_tight_hamilton(gen_tight_cycle(7, 3));
    CHECK(c7.outcome == SearchOutcome::kFound);
    CHECK(check_walk(gen_tight_cycle(7, 3), c7.cycle->vertices, true).ok);
    CHECK(find_tight_hamilton(Hypergraph(6, 3, {})).outcome == SearchOutcome::kExhausted);
    CHECK(find_tight_hamilton(gen_space_barrier(9, 3, 1)).outcome == SearchOutcome::kExhausted);
    CHECK_THROWS_AS(find_tight_hamilton(gen_complete(3, 3)), Error);
  }

  TEST_CASE("outcome names") {
    CHECK(std::string(outcome_name(SearchOutcome::kFound)) == "found");
    CHECK(std::string(outcome_name(SearchOutcome::kExhausted)) == "exhausted-none");
    CHECK(std::string(outcome_name(SearchOutcome::kTimeout)) == "timeout");
  }

  TEST_CASE("agrees with a permutation oracle on random graphs with seven vertices") {
    int found = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Hypergraph h = gen_random(7, 3, Rational(static_cast<long long>(4 + seed % 5), 10), seed);
      const HamiltonResult r = find_tight_hamilton(h);
      REQUIRE(r.outcome != SearchOutcome::kTimeout);
      CHECK((r.outcome == SearchOutcome::kFound) == naive_hamiltonian(h));
      if (r.cycle) {
        CHECK(r.cycle->length() == 7);
        CHECK(check_walk(h, r.cycle->vertices, true).ok);
        ++found;
      }
    }
    CHECK(found > 0);
    CHECK(found < 60);
  }

  TEST_CASE("agrees with the permutation oracle for 2-graphs and 4-graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Hypergraph g2 = gen_random(7, 2, Rational(1, 2), seed);
      CHECK((find_tight_hamilton(g2).outcome == SearchOutcome::kFound) == naive_hamiltonian(g2));
      const Hypergraph g4 = gen_random(7, 4, Rational(3, 5), seed);
      CHECK((find_tight_hamilton(g4).outcome == SearchOutcome::kFound) == naive_hamiltonian(g4));
    }
  }

  TEST_CASE("agrees with a state-space oracle up to twelve vertices") {
    for (int n : {9, 10, 11, 12}) {
      const Hypergraph barrier = gen_space_barrier(n, 3, 1);
      CHECK(state_hamiltonian(barrier) == (find_tight_hamilton(barrier).outcome == SearchOutcome::kFound));
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Hypergraph h = gen_random_min_degree(n, 3, 1, Rational(static_cast<long long>(2 + seed), 10), seed);
        const HamiltonResult r = find_tight_hamilton(h);
        REQUIRE(r.outcome != SearchOutcome::kTimeout);
        CHECK(state_hamiltonian(h) == (r.outcome == SearchOutcome::kFound));
      }
    }
  }

  TEST_CASE("adding edges never destroys a Hamilton cycle") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Hypergraph h = gen_random(8, 3, Rational(1, 2), seed);
      if (find_tight_hamilton(h).outcome != SearchOutcome::kFound) continue;
      const Hypergraph more = edge_union(h, gen_random(8, 3, Rational(1, 5), seed + 1000));
      CHECK(find_tight_hamilton(more).outcome == SearchOutcome::kFound);
    }
  }

  TEST_CASE("node budget produces a timeout") {
    SearchBudget b;
    b.max_nodes = 3;
    const HamiltonResult r = find_tight_hamilton(gen_space_barrier(12, 3, 1), b);
    CHECK(r.outcome == SearchOutcome::kTimeout);
    CHECK_FALSE(r.cycle);
  }

  TEST_CASE("shorter tight cycles") {
    const Hypergraph h = graph(8, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}});
    const HamiltonResult r = find_tight_cycle(h, 5);
    CHECK(r.outcome == SearchOutcome::kFound);
    CHECK(r.cycle->vertices.front() == 0);
    CHECK(find_tight_cycle(h, 6).outcome == SearchOutcome::kExhausted);
    CHECK(find_tight_hamilton(h).outcome == SearchOutcome::kExhausted);
    CHECK_THROWS_AS(find_tight_cycle(h, 3), Error);
    CHECK_THROWS_AS(find_tight_cycle(h, 9), Error);
  }

  TEST_CASE("gadget in a complete graph and its swap") {
    const Hypergraph g = gen_complete(24, 3);
    GadgetOptions opt;
    opt.seed = 5;
    const GadgetSearch s = find_absorbing_gadget(g, {0, 1, 2}, opt);
    REQUIRE(s.outcome == SearchOutcome::kFound);
    REQUIRE(s.gadget);
    CHECK(check_gadget(g, *s.gadget).empty());
    CHECK(set_size(s.gadget->span()) == 21);
    const std::vector<Vertex> path = gadget_path(*s.gadget);
    const SwapReport sw = verify_absorption_swap(g, path, *s.gadget);
    REQUIRE(sw.ok);
    CHECK(sw.swapped.size() == path.size() + 3);
    CHECK(std::equal(path.begin(), path.begin() + 2, sw.swapped.begin()));
    CHECK(std::equal(path.end() - 2, path.end(), sw.swapped.end() - 2));
  }

  TEST_CASE("gadget absence is certified on small hosts") {
    const GadgetSearch tiny = find_absorbing_gadget(gen_complete(20, 3), {0, 1, 2});
    CHECK(tiny.outcome == SearchOutcome::kExhausted);
    std::vector<VertexSet> e;
    for (VertexSet x : gen_complete(26, 3).edges())
      if (!has_vertex(x, 25)) e.push_back(x);
    CHECK(find_absorbing_gadget(Hypergraph(26, 3, e), {0, 1, 25}).outcome == SearchOutcome::kExhausted);
    CHECK_THROWS_AS(find_absorbing_gadget(gen_complete(24, 3), {0, 1}), Error);
    CHECK_THROWS_AS(find_absorbing_gadget(gen_complete(24, 3), {0, 1, 1}), Error);
  }

  TEST_CASE("corrupted gadgets are rejected") {
    const Hypergraph g = gen_complete(24, 3);
    AbsorbingGadget gd = *find_absorbing_gadget(g, {0, 1, 2}).gadget;
    AbsorbingGadget overlap = gd;
    overlap.b[0] = overlap.a[0];
    CHECK_FALSE(check_gadget(g, overlap).empty());
    AbsorbingGadget touching = gd;
    touching.p[0][0] = 0;
    CHECK_FALSE(check_gadget(g, touching).empty());
    const SwapReport bad = verify_absorption_swap(g, {gd.a[0], gd.a[1]}, gd);
    CHECK_FALSE(bad.ok);
  }

  TEST_CASE("swap inside a longer path keeps its ends") {
    const Hypergraph g = gen_complete(26, 3);
    const AbsorbingGadget gd = *find_absorbing_gadget(g, {0, 1, 2}).gadget;
    std::vector<Vertex> path;
    const VertexSet used = gd.span() | to_set(std::vector<Vertex>{0, 1, 2});
    for (Vertex v = 0; v < 26; ++v)
      if (!has_vertex(used, v)) path.push_back(v);
    const std::vector<Vertex> head = path;
    const std::vector<Vertex> core = gadget_path(gd);
    path.insert(path.end(), core.begin(), core.end());
    const SwapReport sw = verify_absorption_swap(g, path, gd);
    REQUIRE(sw.ok);
    CHECK(sw.swapped.size() == 26);
    CHECK(std::equal(head.begin(), head.end(), sw.swapped.begin()));
  }
}
