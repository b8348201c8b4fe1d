#include "tightlab/matching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "tightlab/error.hpp"
#include "tightlab/lp.hpp"
#include "tightlab/random.hpp"

namespace tl {

namespace {

void require_weighting(const Hypergraph& h, const VertexWeighting& b) {
  if (static_cast<int>(b.size()) != h.n())
    fail(ErrorCode::kInvalidArgument, "weighting has " + std::to_string(b.size()) +
                                          " entries for " + std::to_string(h.n()) + " vertices");
  for (std::size_t v = 0; v < b.size(); ++v)
    if (b[v] < 0 || b[v] > 1)
      fail(ErrorCode::kInvalidArgument, "weight of vertex " + std::to_string(v) + " is " +
                                            to_string(b[v]) + ", outside [0,1]");
}

Rational total(const VertexWeighting& b) {
  Rational s = 0;
  for (const Rational& x : b) s += x;
  return s;
}

LinearProgram matching_program(const Hypergraph& h, const VertexWeighting& b, RowSense sense) {
  LinearProgram lp;
  lp.num_vars = static_cast<int>(h.edge_count());
  lp.objective.assign(h.edge_count(), sense == RowSense::kEqual ? Rational(0) : Rational(1));
  lp.rows.resize(h.n());
  for (int v = 0; v < h.n(); ++v) {
    lp.rows[v].sense = sense;
    lp.rows[v].rhs = b[v];
  }
  for (std::size_t i = 0; i < h.edges().size(); ++i)
    for (Vertex v : members(h.edges()[i])) lp.rows[v].coeffs.emplace_back(static_cast<int>(i), Rational(1));
  return lp;
}

std::uint64_t shadow_count(const Hypergraph& h, int j) {
  if (j == 0) return h.empty() ? 0 : 1;
  return shadow(h, j).edge_count();
}

struct MatchingSearch {
  int k = 0;
  std::size_t best = 0;
  std::vector<VertexSet> best_edges;
  std::vector<VertexSet> chosen;
  std::size_t nodes = 0;
  std::size_t lp_budget = 256;

  void run(const std::vector<VertexSet>& edges, int n) {
    ++nodes;
    if (edges.empty()) {
      if (chosen.size() > best || best_edges.empty()) {
        best = chosen.size();
        best_edges = chosen;
      }
      return;
    }
    VertexSet covered = 0;
    for (VertexSet e : edges) covered |= e;
    if (chosen.size() + static_cast<std::size_t>(set_size(covered) / k) <= best) return;
    if (lp_budget > 0) {
      --lp_budget;
      const Hypergraph rest(n, k, edges);
      const Rational nu = lp_matching(rest, uniform_weighting(n)).value;
      const BigInt floor_nu = numerator(nu) / denominator(nu);
      if (chosen.size() + floor_nu.convert_to<std::size_t>() <= best) return;
    }
    const Vertex v = std::countr_zero(covered);
    std::vector<VertexSet> without;
    for (VertexSet e : edges)
      if (!has_vertex(e, v)) without.push_back(e);
    for (VertexSet e : edges) {
      if (!has_vertex(e, v)) continue;
      std::vector<VertexSet> rest;
      for (VertexSet f : without)
        if ((f & e) == 0) rest.push_back(f);
      chosen.push_back(e);
      run(rest, n);
      chosen.pop_back();
    }
    run(without, n);
  }
};

}  // namespace

VertexWeighting uniform_weighting(int n, const Rational& value) {
  return VertexWeighting(static_cast<std::size_t>(std::max(n, 0)), value);
}

FractionalMatching lp_matching(const Hypergraph& h, const VertexWeighting& b) {
  require_weighting(h, b);
  FractionalMatching out;
  out.weights.assign(h.edge_count(), Rational(0));
  out.cover.assign(h.n(), Rational(0));
  if (h.empty()) return out;
  const LpSolution s = solve_lp(matching_program(h, b, RowSense::kLessEqual));
  if (s.status != LpStatus::kOptimal)
    fail(ErrorCode::kCertificateViolation, "matching LP did not reach an optimum");
  out.value = s.value;
  out.weights = s.x;
  out.cover = s.duals;
  return out;
}

std::string check_matching_certificate(const Hypergraph& h, const VertexWeighting& b,
                                       const FractionalMatching& m) {
  if (m.weights.size() != h.edge_count()) return "weight vector has the wrong length";
  if (m.cover.size() != static_cast<std::size_t>(h.n())) return "cover vector has the wrong length";
  std::vector<Rational> load(h.n());
  Rational primal = 0;
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    if (m.weights[i] < 0) return "negative edge weight";
    primal += m.weights[i];
    for (Vertex v : members(h.edges()[i])) load[v] += m.weights[i];
  }
  Rational dual = 0;
  for (int v = 0; v < h.n(); ++v) {
    if (load[v] > b[v]) return "load of vertex " + std::to_string(v) + " exceeds b";
    if (m.cover[v] < 0) return "negative cover value";
    dual += m.cover[v] * b[v];
    if (m.cover[v] > 0 && load[v] != b[v])
      return "slackness fails at vertex " + std::to_string(v);
  }
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    Rational c = 0;
    for (Vertex v : members(h.edges()[i])) c += m.cover[v];
    if (c < 1) return "cover misses edge " + std::to_string(i);
    if (m.weights[i] > 0 && c != 1) return "slackness fails at edge " + std::to_string(i);
  }
  if (primal != m.value) return "matching size differs from the reported value";
  if (dual != m.value) return "cover value differs from the matching size";
  return {};
}

Rational matching_density(const FractionalMatching& m, int n) {
  if (n <= 0) return Rational(0);
  return m.value / n;
}

IntegralMatching max_matching_exact(const Hypergraph& h, std::size_t edge_guard) {
  if (h.edge_count() > edge_guard)
    fail(ErrorCode::kGuardExceeded, "exact matching limited to " + std::to_string(edge_guard) + " edges");
  IntegralMatching out;
  if (h.empty()) return out;
  if (h.k() == 0) {
    out.edges.push_back(0);
    return out;
  }
  MatchingSearch search;
  search.k = h.k();
  search.run(h.edges(), h.n());
  out.edges = search.best_edges;
  out.nodes = search.nodes;
  VertexSet used = 0;
  for (VertexSet e : out.edges) {
    if ((used & e) != 0 || !h.contains(e))
      fail(ErrorCode::kCertificateViolation, "matching witness is not a set of disjoint edges");
    used |= e;
  }
  return out;
}

std::optional<std::vector<Rational>> perfect_b_matching(const Hypergraph& h, const VertexWeighting& b) {
  require_weighting(h, b);
  if (h.empty()) {
    for (const Rational& x : b)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  const LpSolution s = solve_lp(matching_program(h, b, RowSense::kEqual));
  if (s.status != LpStatus::kOptimal) return std::nullopt;
  std::vector<Rational> load(h.n());
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    if (s.x[i] < 0) fail(ErrorCode::kCertificateViolation, "negative weight in perfect b-matching");
    for (Vertex v : members(h.edges()[i])) load[v] += s.x[i];
  }
  for (int v = 0; v < h.n(); ++v)
    if (load[v] != b[v]) fail(ErrorCode::kCertificateViolation, "perfect b-matching misses a load");
  return s.x;
}

RobustReport is_robustly_matchable(const Hypergraph& h, const Rational& gamma, const RobustOptions& options) {
  if (gamma < 0 || gamma >= 1) fail(ErrorCode::kInvalidArgument, "gamma must lie in [0, 1)");
  const int n = h.n();
  const Rational low = 1 - gamma;
  RobustReport out;
  auto check = [&](const VertexWeighting& b) {
    ++out.corners_checked;
    if (perfect_b_matching(h, b)) return true;
    out.failing_weighting = b;
    return false;
  };
  if (n <= options.corner_guard) {
    out.mode = "corners";
    out.certified = true;
    // Vertex 0 is the most significant bit, so corners come in the order
    // (1,...,1), (1,...,1,1-g), ...
    const std::uint64_t count = std::uint64_t{1} << n;
    const std::uint64_t step = gamma == 0 ? count : 1;
    for (std::uint64_t mask = 0; mask < count; mask += step) {
      VertexWeighting b(n);
      for (int v = 0; v < n; ++v) b[v] = ((mask >> (n - 1 - v)) & 1U) ? low : Rational(1);
      if (!check(b)) return out;
    }
    out.robust = true;
    return out;
  }
  if (!options.allow_sampling)
    fail(ErrorCode::kGuardExceeded, "corner enumeration limited to " + std::to_string(options.corner_guard) +
                                        " vertices; enable sampling for larger graphs");
  out.mode = "sampled, not certified";
  out.certified = false;
  constexpr std::uint64_t kGrid = 1U << 16;
  for (std::size_t s = 0; s < options.samples; ++s) {
    VertexWeighting b(n);
    const bool corner = s % 2 == 0;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t u = counter_hash({options.seed, s, static_cast<std::uint64_t>(v)});
      if (corner) b[v] = (u & 1U) ? low : Rational(1);
      else b[v] = low + gamma * Rational(static_cast<long long>(u % (kGrid + 1)), static_cast<long long>(kGrid));
    }
    if (!check(b)) return out;
  }
  out.robust = true;
  return out;
}

LiftingReport verify_matching_lifting(const Hypergraph& h, int d, const Rational& m, const VertexWeighting& b) {
  require_weighting(h, b);
  const int k = h.k();
  if (d < 1 || d > k - 1) fail(ErrorCode::kInvalidArgument, "lifting needs 1 <= d <= k-1");
  if (m < 0) fail(ErrorCode::kInvalidArgument, "m must be nonnegative");
  if (m * k > total(b)) fail(ErrorCode::kInvalidArgument, "m exceeds |b|/k");
  LiftingReport r;
  r.d = d;
  r.m = m;
  for (int j = d; j >= 0; --j) {
    LiftingLevel level;
    level.level = j;
    std::vector<VertexSet> sets;
    if (d == 1 && j == 1) {
      for (Vertex v = 0; v < h.n(); ++v) sets.push_back(singleton(v));
    } else if (j == 0) {
      sets.push_back(0);
    } else {
      sets = shadow(h, j).edges();
    }
    level.sets = sets.size();
    for (VertexSet s : sets) {
      const Hypergraph l = j == 0 ? h : link(h, s);
      const bool matched = lp_matching(l, b).value >= m;
      bool sized = true;
      if (j < d) {
        Rational mass = 0;
        const VertexSet verts = d == 1 ? full_set(h.n()) : l.support();
        for (Vertex v : members(verts)) mass += b[v];
        sized = m * (k - j) <= mass;
      }
      if (!matched) level.links_matched = false;
      if (!sized) level.size_condition = false;
      if ((!matched || !sized) && !level.witness) level.witness = s;
    }
    r.levels.push_back(level);
  }
  r.hypothesis = r.levels.front().links_matched;
  for (std::size_t i = 1; i < r.levels.size(); ++i) r.hypothesis = r.hypothesis && r.levels[i].size_condition;
  r.nu = lp_matching(h, b).value;
  r.conclusion = r.nu >= m;
  return r;
}

BoundReport check_frankl_bound(const Hypergraph& c, int s) {
  if (s < 1) fail(ErrorCode::kInvalidArgument, "s must be at least 1");
  BoundReport r;
  const std::uint64_t e = c.edge_count();
  const std::uint64_t e_low = shadow_count(c, c.k() - 1);
  r.hypothesis = BigInt(e) >= BigInt(s - 1) * e_low + 1;
  r.matching = max_matching_exact(c).size();
  r.conclusion = r.matching >= static_cast<std::size_t>(s);
  r.detail = "e = " + std::to_string(e) + ", shadow = " + std::to_string(e_low) +
             ", max matching = " + std::to_string(r.matching);
  return r;
}

BoundReport check_erdos_gallai(const Hypergraph& g, int s) {
  if (g.k() != 2) fail(ErrorCode::kInvalidArgument, "Erdos-Gallai applies to 2-graphs");
  if (s < 0 || 2 * s > g.n()) fail(ErrorCode::kInvalidArgument, "need 0 <= s <= n/2");
  BoundReport r;
  const BigInt e = g.edge_count();
  const BigInt a = binomial(2 * s - 1, 2);
  const BigInt b = binomial(g.n(), 2) - binomial(g.n() - s + 1, 2);
  r.hypothesis = e > std::max(a, b);
  r.matching = max_matching_exact(g).size();
  r.conclusion = r.matching >= static_cast<std::size_t>(s);
  r.detail = "e = " + e.str() + ", threshold = " + std::max(a, b).str() +
             ", max matching = " + std::to_string(r.matching);
  return r;
}

KruskalKatonaReport check_kruskal_katona(const Hypergraph& h, int j) {
  const int k = h.k();
  if (j < 1 || j >= k) fail(ErrorCode::kInvalidArgument, "need 1 <= j < k");
  KruskalKatonaReport r;
  r.j = j;
  r.edges = h.edge_count();
  r.shadow_edges = shadow(h, j).edge_count();
  r.shadow_density = ratio(BigInt(r.shadow_edges), binomial(h.n(), j));
  const Rational delta = edge_density(h);
  r.density_form = std::pow(to_double(delta), static_cast<double>(j) / k);
  if (r.edges == 0) {
    r.x = 0;
    r.bound = 0;
    r.holds = true;
    return r;
  }
  // C(x, k) increases on [k - 1, inf); e <= C(n, k) keeps the root below n.
  Rational lo = k - 1, hi = std::max(h.n(), k);
  const Rational target = Rational(BigInt(r.edges));
  const Rational tol = Rational(1, BigInt(1) << 40);
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    if (binomial(mid, k) <= target) lo = mid;
    else hi = mid;
  }
  if (binomial(hi, k) == target) lo = hi;
  r.x = lo;
  r.bound = binomial(lo, j);
  r.holds = Rational(BigInt(r.shadow_edges)) >= r.bound - Rational(1, 1000000000);
  return r;
}

}  // namespace tl
