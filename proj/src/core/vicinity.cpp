#include "tightlab/vicinity.hpp"

#include <algorithm>
#include <numeric>

#include "tightlab/error.hpp"

namespace tl {

namespace {

std::uint64_t shadow_size(const Hypergraph& h, int j) {
  if (j == 0) return h.empty() ? 0 : 1;
  return shadow(h, j).edge_count();
}

PropertyCheck pass(std::string name, std::string detail, Json witness = nullptr) {
  return {std::move(name), CheckStatus::kPass, std::move(detail), std::move(witness)};
}

PropertyCheck failed(std::string name, std::string detail, Json witness) {
  return {std::move(name), CheckStatus::kFail, std::move(detail), std::move(witness)};
}

void require_open_unit(const Rational& x, const char* name) {
  if (x <= 0 || x >= 1) fail(ErrorCode::kInvalidArgument, std::string(name) + " must lie in (0, 1)");
}

std::vector<std::vector<Vertex>> edge_lists(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> out;
  for (VertexSet e : h.edges()) out.push_back(members(e));
  return out;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

}  // namespace

const Hypergraph* Vicinity::find(VertexSet s) const {
  const auto it = std::lower_bound(keys.begin(), keys.end(), s, lex_less);
  if (it == keys.end() || *it != s) return nullptr;
  return &members[static_cast<std::size_t>(it - keys.begin())];
}

std::string check_vicinity(const Hypergraph& r, const Vicinity& v) {
  if (v.n != r.n() || v.k != r.k()) return "vicinity and host disagree on n or k";
  if (v.d < 1 || v.d > r.k() - 1) return "d outside 1..k-1";
  if (v.keys.size() != v.members.size()) return "keys and members differ in length";
  if (v.keys != shadow(r, v.d).edges()) return "keys differ from the d-th shadow of the host";
  for (std::size_t i = 0; i < v.keys.size(); ++i) {
    const Hypergraph& c = v.members[i];
    if (c.n() != r.n() || c.k() != r.k() - v.d) return "member has the wrong shape";
    for (VertexSet a : c.edges())
      if ((a & v.keys[i]) != 0 || !r.contains(a | v.keys[i]))
        return "member edge " + std::to_string(i) + " is not in the link of its key";
  }
  return {};
}

Hypergraph generate_graph(const Vicinity& v) {
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < v.keys.size(); ++i)
    for (VertexSet a : v.members[i].edges()) edges.push_back(a | v.keys[i]);
  return Hypergraph(v.n, v.k, std::move(edges));
}

bool ratio_certificate_holds(const SelectionRecord& rec) {
  return BigInt(rec.chosen_edges) * rec.link_shadow >= BigInt(rec.link_edges) * rec.chosen_shadow;
}

Selection select_vicinity(const Hypergraph& r, int d, SelectionStrategy strategy) {
  if (d < 1 || d > r.k() - 1) fail(ErrorCode::kInvalidArgument, "select_vicinity needs 1 <= d <= k-1");
  const int l = r.k() - d;
  Selection out;
  out.vicinity.n = r.n();
  out.vicinity.k = r.k();
  out.vicinity.d = d;
  for (VertexSet s : shadow(r, d).edges()) {
    const Hypergraph link_graph = link(r, s);
    const ComponentPartition parts = tight_components(link_graph);
    SelectionRecord rec;
    rec.s = s;
    rec.components = parts.count();
    rec.link_edges = link_graph.edge_count();
    rec.link_shadow = shadow_size(link_graph, l - 1);
    for (std::size_t c = 0; c < parts.count(); ++c) {
      const ComponentSummary& sum = parts.summaries[c];
      const std::size_t e = sum.edge_count, sh = sum.shadow_edge_count;
      bool better = rec.chosen < 0;
      if (!better && strategy == SelectionStrategy::kMaxEdges) better = e > rec.chosen_edges;
      if (!better && strategy == SelectionStrategy::kMaxRatio)
        better = BigInt(e) * rec.chosen_shadow > BigInt(rec.chosen_edges) * sh;
      if (better) {
        rec.chosen = static_cast<int>(c);
        rec.chosen_edges = e;
        rec.chosen_shadow = sh;
      }
    }
    Hypergraph member(r.n(), l, {});
    if (rec.chosen >= 0) member = parts.component(link_graph, rec.chosen);
    if (strategy == SelectionStrategy::kMaxRatio && rec.chosen >= 0 && !ratio_certificate_holds(rec))
      fail(ErrorCode::kCertificateViolation, "max-ratio component fails the ratio inequality");
    out.vicinity.keys.push_back(s);
    out.vicinity.members.push_back(std::move(member));
    out.records.push_back(rec);
  }
  return out;
}

Vertex switcher_witness(const Hypergraph& c, VertexSet a_edge, Vertex central, Vertex b) {
  for (Vertex w = 0; w < c.n(); ++w) {
    if (has_vertex(a_edge, w)) continue;
    const VertexSet grown = a_edge | singleton(w);
    if (c.contains(grown & ~singleton(central)) && c.contains(grown & ~singleton(b))) return w;
  }
  return -1;
}

std::optional<Switcher> find_switcher(const Hypergraph& c) {
  if (c.empty()) return std::nullopt;
  const int l = c.k();
  if (l == 1) return Switcher{c.edges().front(), std::countr_zero(c.edges().front()), {}};
  const std::vector<std::uint64_t> deg = degree_table(c, l - 1);
  std::vector<std::pair<Rational, VertexSet>> order;
  order.reserve(c.edge_count());
  for (VertexSet a : c.edges()) {
    Rational f = 0;
    for (Vertex v : members(a)) f += Rational(c.n(), static_cast<long long>(deg[colex_rank(a & ~singleton(v))]));
    order.emplace_back(std::move(f), a);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [f, a] : order) {
    for (Vertex central : members(a)) {
      Switcher sw{a, central, {}};
      bool ok = true;
      for (Vertex b : members(a)) {
        const Vertex w = switcher_witness(c, a, central, b);
        if (w < 0) {
          ok = false;
          break;
        }
        sw.witnesses.emplace_back(b, w);
      }
      if (ok) return sw;
    }
  }
  return std::nullopt;
}

std::string check_arc(const Vicinity& v, const Arc& arc) {
  const int k = v.k, d = v.d;
  if (static_cast<int>(arc.tuple.size()) != k + 1) return "arc must have k+1 vertices";
  VertexSet all = 0;
  for (Vertex x : arc.tuple) {
    if (x < 0 || x >= v.n) return "arc vertex out of range";
    all |= singleton(x);
  }
  if (set_size(all) != k + 1) return "arc vertices are not distinct";
  auto range = [&](int from, int to) {  // 1-based inclusive
    VertexSet s = 0;
    for (int i = from; i <= to; ++i) s |= singleton(arc.tuple[i - 1]);
    return s;
  };
  const Hypergraph* c1 = v.find(range(1, d));
  if (!c1) return "{v1..vd} is not in the d-th shadow";
  if (!c1->contains(range(d + 1, k))) return "{v_{d+1}..v_k} is not in C_{v1..vd}";
  const Hypergraph* c2 = v.find(range(2, d + 1));
  if (!c2) return "{v2..v_{d+1}} is not in the d-th shadow";
  if (!c2->contains(range(d + 2, k + 1))) return "{v_{d+2}..v_{k+1}} is not in C_{v2..v_{d+1}}";
  return {};
}

ArcSearch find_arc(const Vicinity& v) {
  ArcSearch out;
  // S, v1 in S, A in C_S, u = v_{d+1} in A, w = v_{k+1}.
  auto attempt = [&](std::size_t i, Vertex v1, VertexSet a, Vertex u) -> std::optional<Arc> {
    const VertexSet s = v.keys[i];
    const VertexSet s2 = (s & ~singleton(v1)) | singleton(u);
    const Hypergraph* c2 = v.find(s2);
    if (!c2) return std::nullopt;
    const VertexSet rest = a & ~singleton(u);
    for (Vertex w = 0; w < v.n; ++w) {
      if (has_vertex(s | a, w)) continue;
      ++out.candidates;
      if (!c2->contains(rest | singleton(w))) continue;
      Arc arc;
      arc.tuple.push_back(v1);
      for (Vertex x : members(s & ~singleton(v1))) arc.tuple.push_back(x);
      arc.tuple.push_back(u);
      for (Vertex x : members(rest)) arc.tuple.push_back(x);
      arc.tuple.push_back(w);
      return arc;
    }
    return std::nullopt;
  };
  // Greedy: least vertex of S first, v_{d+1} of maximum degree in C_S.
  for (std::size_t i = 0; i < v.keys.size() && !out.arc; ++i) {
    const Hypergraph& c = v.members[i];
    if (c.empty()) continue;
    std::vector<std::uint64_t> deg(v.n, 0);
    for (VertexSet a : c.edges())
      for (Vertex x : members(a)) ++deg[x];
    const Vertex u = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
    const Vertex v1 = std::countr_zero(v.keys[i]);
    for (VertexSet a : c.edges()) {
      if (!has_vertex(a, u)) continue;
      if (auto arc = attempt(i, v1, a, u)) {
        out.arc = std::move(arc);
        out.greedy = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < v.keys.size() && !out.arc; ++i)
    for (Vertex v1 : members(v.keys[i])) {
      for (VertexSet a : v.members[i].edges()) {
        for (Vertex u : members(a))
          if ((out.arc = attempt(i, v1, a, u))) break;
        if (out.arc) break;
      }
      if (out.arc) break;
    }
  if (out.arc) {
    const std::string problem = check_arc(v, *out.arc);
    if (!problem.empty()) fail(ErrorCode::kCertificateViolation, "arc search produced an invalid arc: " + problem);
  }
  return out;
}

bool PropertyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.status == CheckStatus::kPass; });
}

const PropertyCheck& PropertyReport::get(const std::string& name) const {
  for (const PropertyCheck& c : checks)
    if (c.name == name) return c;
  fail(ErrorCode::kInvalidArgument, "no property named " + name);
}

Json report_to_json(const PropertyReport& r) {
  Json checks = Json::array();
  for (const PropertyCheck& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}, {"witness", c.witness}});
  return Json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

PropertyReport verify_hamilton_vicinity(const Hypergraph& r, const Vicinity& v, const Rational& gamma,
                                        const Rational& delta, const VicinityOptions& options) {
  require_open_unit(gamma, "gamma");
  require_open_unit(delta, "delta");
  const std::string problem = check_vicinity(r, v);
  if (!problem.empty()) fail(ErrorCode::kInvalidArgument, "invalid vicinity: " + problem);
  const int n = v.n, k = v.k, d = v.d;
  PropertyReport rep;

  {  // V1
    std::optional<std::size_t> bad;
    std::size_t comps = 0;
    for (std::size_t i = 0; i < v.keys.size() && !bad; ++i) {
      comps = tight_components(v.members[i]).count();
      if (comps != 1) bad = i;
    }
    if (bad)
      rep.checks.push_back(failed("V1", "C_S has " + std::to_string(comps) + " tight components",
                                  Json{{"S", set_to_json(v.keys[*bad])}, {"components", comps}}));
    else
      rep.checks.push_back(pass("V1", "every C_S is tightly connected"));
  }
  {  // V2
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < v.keys.size() && !bad; ++i)
      for (std::size_t j = i + 1; j < v.keys.size() && !bad; ++j) {
        if (options.adjacent_pairs_only && set_size(v.keys[i] & v.keys[j]) != d - 1) continue;
        ++pairs;
        const Hypergraph& a = v.members[i].edge_count() <= v.members[j].edge_count() ? v.members[i] : v.members[j];
        const Hypergraph& b = &a == &v.members[i] ? v.members[j] : v.members[i];
        const bool meet = std::any_of(a.edges().begin(), a.edges().end(), [&](VertexSet e) { return b.contains(e); });
        if (!meet) bad = std::make_pair(i, j);
      }
    if (bad)
      rep.checks.push_back(failed("V2", "C_S and C_S' share no edge",
                                  Json{{"S", set_to_json(v.keys[bad->first])}, {"S2", set_to_json(v.keys[bad->second])}}));
    else
      rep.checks.push_back(pass("V2", std::to_string(pairs) + (options.adjacent_pairs_only ? " adjacent" : "") +
                                          " pairs share an edge"));
  }
  {  // V3
    std::optional<std::size_t> bad;
    Json switchers = Json::array();
    for (std::size_t i = 0; i < v.keys.size() && !bad; ++i) {
      const auto sw = find_switcher(v.members[i]);
      if (!sw) bad = i;
    }
    const ArcSearch arc = find_arc(v);
    if (bad)
      rep.checks.push_back(failed("V3", "C_S has no switcher", Json{{"S", set_to_json(v.keys[*bad])}}));
    else if (!arc.arc)
      rep.checks.push_back(failed("V3", "the vicinity has no arc (exhaustive)", Json{{"arc", nullptr}}));
    else
      rep.checks.push_back(pass("V3", std::string("switchers everywhere; arc found ") + (arc.greedy ? "greedily" : "exhaustively"),
                                Json{{"arc", arc.arc->tuple}}));
  }
  {  // V4
    const Rational need = Rational(1, k) + gamma;
    std::optional<std::size_t> bad;
    Rational worst;
    for (std::size_t i = 0; i < v.keys.size(); ++i) {
      const Rational dens = matching_density(lp_matching(v.members[i], uniform_weighting(n)), n);
      if (i == 0 || dens < worst) worst = dens;
      if (dens < need && !bad) bad = i;
    }
    Json w{{"required", rational_to_json(need)}, {"min_density", rational_to_json(worst)}};
    if (bad) {
      w["S"] = set_to_json(v.keys[*bad]);
      rep.checks.push_back(failed("V4", "fractional matching density below 1/k + gamma", w));
    } else {
      rep.checks.push_back(pass("V4", "fractional matching density at least 1/k + gamma", w));
    }
  }
  {  // V5
    const Rational need = 1 - delta + gamma;
    const BigInt denom = binomial(n - d, k - d);
    std::optional<std::size_t> bad;
    Rational worst;
    for (std::size_t i = 0; i < v.keys.size(); ++i) {
      const Rational dens = Rational(BigInt(v.members[i].edge_count()), denom);
      if (i == 0 || dens < worst) worst = dens;
      if (dens < need && !bad) bad = i;
    }
    Json w{{"required", rational_to_json(need)}, {"min_density", rational_to_json(worst)}};
    if (bad) {
      w["S"] = set_to_json(v.keys[*bad]);
      rep.checks.push_back(failed("V5", "edge density below 1 - delta + gamma", w));
    } else {
      rep.checks.push_back(pass("V5", "edge density at least 1 - delta + gamma", w));
    }
  }
  return rep;
}

Hypergraph restrict_to_support(const Hypergraph& h) {
  const std::vector<Vertex> keep = members(h.support());
  std::vector<Vertex> index(h.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    VertexSet m = 0;
    for (Vertex x : members(e)) m |= singleton(index[x]);
    edges.push_back(m);
  }
  return Hypergraph(static_cast<int>(keep.size()), h.k(), std::move(edges));
}

PropertyReport verify_framework(const Hypergraph& r, const Hypergraph& h, const Rational& alpha,
                                const Rational& gamma, const Rational& delta, const FrameworkOptions& options) {
  if (alpha < 0 || alpha >= 1) fail(ErrorCode::kInvalidArgument, "alpha must lie in [0, 1)");
  require_open_unit(gamma, "gamma");
  require_open_unit(delta, "delta");
  if (!is_subgraph(h, r)) fail(ErrorCode::kInvalidArgument, "H is not a subgraph of R");
  PropertyReport rep;
  const int n = r.n(), k = r.k();
  const int span = set_size(h.support());
  {  // F1
    const Rational need = (1 - alpha) * n;
    Json w{{"vertices", span}, {"required", rational_to_json(need)}};
    if (Rational(span) >= need) rep.checks.push_back(pass("F1", "H spans enough vertices", w));
    else rep.checks.push_back(failed("F1", "H spans too few vertices", w));
  }
  {  // F2
    const std::size_t comps = tight_components(h).count();
    if (comps == 1) rep.checks.push_back(pass("F2", "H is tightly connected"));
    else rep.checks.push_back(failed("F2", "H has " + std::to_string(comps) + " tight components", Json{{"components", comps}}));
  }
  {  // F3
    const ClosedWalkSearch search = find_closed_walk(h, 1);
    if (search.walk) {
      rep.checks.push_back(pass("F3", "closed walk of length " + std::to_string(search.walk->length()),
                                walk_to_json(*search.walk)));
    } else {
      Json comps = Json::array();
      for (const StrongComponentInfo& c : search.components)
        comps.push_back(Json{{"representative", c.representative}, {"size", c.size}, {"has_cycle", c.has_cycle}, {"period", c.period}});
      rep.checks.push_back(failed("F3", "no closed walk of length 1 mod k; component periods attached",
                                  Json{{"strong_components", std::move(comps)}}));
    }
  }
  const Hypergraph core = restrict_to_support(h);
  {  // F4
    if (core.n() > options.robust.corner_guard && !options.robust.allow_sampling) {
      rep.checks.push_back({"F4", CheckStatus::kSkipped,
                            "support has " + std::to_string(core.n()) + " vertices, above the corner guard", nullptr});
    } else if (h.empty()) {
      rep.checks.push_back(failed("F4", "H has no edges", nullptr));
    } else {
      const RobustReport rr = is_robustly_matchable(core, gamma, options.robust);
      Json w{{"mode", rr.mode}, {"corners_checked", rr.corners_checked}};
      if (rr.failing_weighting) {
        Json b = Json::array();
        for (const Rational& x : *rr.failing_weighting) b.push_back(rational_to_json(x));
        w["failing_weighting"] = std::move(b);
      }
      if (rr.robust) rep.checks.push_back(pass("F4", "robustly matchable (" + rr.mode + ")", w));
      else rep.checks.push_back(failed("F4", "a weighting has no perfect b-matching", w));
    }
  }
  {  // F5
    const Rational need = 1 - delta + gamma;
    if (core.n() <= 1 || k < 2) {
      rep.checks.push_back(failed("F5", "H has too few vertices for a degree bound", Json{{"required", rational_to_json(need)}}));
    } else {
      const DegreeReport dr = degree_stats(core, 1);
      Json w{{"required", rational_to_json(need)}, {"min_relative_degree", rational_to_json(dr.min_relative_degree)}};
      if (dr.min_relative_degree >= need) rep.checks.push_back(pass("F5", "minimum relative vertex degree large enough", w));
      else {
        w["vertex"] = members(h.support())[std::countr_zero(dr.argmin_set)];
        rep.checks.push_back(failed("F5", "minimum relative vertex degree too small", w));
      }
    }
  }
  return rep;
}

PropertyReport verify_perturbed_degree(const Hypergraph& r, int d, const Rational& alpha, const Rational& delta) {
  const int n = r.n(), k = r.k();
  if (d < 1 || d > k - 1) fail(ErrorCode::kInvalidArgument, "perturbed degree needs 1 <= d <= k-1");
  PropertyReport rep;
  PropertyCheck p1 = pass("P1", "every shadow edge has relative degree at least delta");
  PropertyCheck p2 = pass("P2", "every complement shadow has density at most alpha");
  PropertyCheck p3 = pass("P3", "every lower shadow edge has small degree into the complement shadow");
  for (int j = 1; j <= d; ++j) {
    const std::vector<std::uint64_t> deg = degree_table(r, j);
    const BigInt ext = binomial(n - j, k - j);
    std::uint64_t missing = 0;
    for (std::uint64_t rank = 0; rank < deg.size(); ++rank) {
      if (deg[rank] == 0) {
        ++missing;
        continue;
      }
      if (p1.status == CheckStatus::kPass && Rational(BigInt(deg[rank]), ext) < delta)
        p1 = failed("P1", "shadow edge with relative degree below delta",
                    Json{{"j", j}, {"set", set_to_json(colex_unrank(rank, j))},
                         {"relative_degree", rational_to_json(Rational(BigInt(deg[rank]), ext))}});
    }
    const Rational dens = Rational(BigInt(missing), binomial(n, j));
    if (p2.status == CheckStatus::kPass && dens > alpha)
      p2 = failed("P2", "complement shadow too dense", Json{{"j", j}, {"density", rational_to_json(dens)}});
    // Z ranges over the (j-1)-th shadow; its degree into the complement of
    // the j-th shadow is over n - j + 1 possible extensions.
    std::vector<VertexSet> lower;
    if (j == 1) {
      if (!r.empty()) lower.push_back(0);
    } else {
      lower = shadow(r, j - 1).edges();
    }
    for (VertexSet z : lower) {
      std::uint64_t out = 0;
      for (Vertex x = 0; x < n; ++x)
        if (!has_vertex(z, x) && deg[colex_rank(z | singleton(x))] == 0) ++out;
      const Rational rel(static_cast<long long>(out), static_cast<long long>(n - j + 1));
      if (rel >= alpha && p3.status == CheckStatus::kPass) {
        p3 = failed("P3", "lower shadow edge with relative degree at least alpha into the complement shadow",
                    Json{{"j", j}, {"set", set_to_json(z)}, {"relative_degree", rational_to_json(rel)}});
      }
    }
  }
  rep.checks = {p1, p2, p3};
  return rep;
}

Json vicinity_to_json(const Vicinity& v) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < v.keys.size(); ++i)
    entries.push_back(Json{{"S", set_to_json(v.keys[i])}, {"edges", edge_lists(v.members[i])}});
  return Json{{"d", v.d}, {"entries", std::move(entries)}};
}

Vicinity vicinity_from_json(const Json& j, int n, int k) {
  if (!j.is_object() || !j.contains("d") || !j.contains("entries"))
    fail(ErrorCode::kParse, "vicinity JSON needs 'd' and 'entries'");
  Vicinity v;
  v.n = n;
  v.k = k;
  v.d = j.at("d").get<int>();
  if (v.d < 1 || v.d > k - 1) fail(ErrorCode::kInvalidArgument, "vicinity d outside 1..k-1");
  std::vector<std::pair<VertexSet, Hypergraph>> items;
  for (const Json& e : j.at("entries")) {
    const VertexSet s = set_from_json(e.at("S"), n);
    if (set_size(s) != v.d) fail(ErrorCode::kInvalidArgument, "vicinity key of the wrong size");
    std::vector<std::vector<int>> edges;
    for (const Json& x : e.at("edges")) edges.push_back(x.get<std::vector<int>>());
    items.emplace_back(s, build_hypergraph(n, k - v.d, edges).graph);
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  for (std::size_t i = 1; i < items.size(); ++i)
    if (items[i].first == items[i - 1].first) fail(ErrorCode::kInvalidArgument, "vicinity key repeated");
  for (auto& [s, c] : items) {
    v.keys.push_back(s);
    v.members.push_back(std::move(c));
  }
  return v;
}

}  // namespace tl
