#include "tightlab/tightlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "tightlab/cleaning.hpp"
#include "tightlab/constructions.hpp"
#include "tightlab/error.hpp"
#include "tightlab/hamilton.hpp"
#include "tightlab/io.hpp"
#include "tightlab/matching.hpp"
#include "tightlab/tight.hpp"
#include "tightlab/vicinity.hpp"

struct tl_hypergraph {
  tl::Hypergraph g;
};

namespace {

using tl::Json;
using tl::Rational;

thread_local std::string last_error;

tl_status status_of(tl::ErrorCode c) {
  switch (c) {
    case tl::ErrorCode::kInvalidArgument: return TL_INVALID_ARGUMENT;
    case tl::ErrorCode::kOutOfRange: return TL_OUT_OF_RANGE;
    case tl::ErrorCode::kParse: return TL_PARSE;
    case tl::ErrorCode::kGuardExceeded: return TL_GUARD_EXCEEDED;
    case tl::ErrorCode::kCertificateViolation: return TL_CERTIFICATE_VIOLATION;
    case tl::ErrorCode::kIo: return TL_IO;
  }
  return TL_INTERNAL;
}

template <class F>
tl_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TL_OK;
  } catch (const tl::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const Json::exception& e) {
    last_error = e.what();
    return TL_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TL_INTERNAL;
  }
}

template <class T>
const T& need(const T* p, const char* name) {
  if (p == nullptr) tl::fail(tl::ErrorCode::kInvalidArgument, std::string(name) + " is null");
  return *p;
}

template <class T>
void need_out(T** p, const char* name) {
  if (p == nullptr) tl::fail(tl::ErrorCode::kInvalidArgument, std::string(name) + " is null");
}

std::string str(const char* s, const char* name) {
  if (s == nullptr) tl::fail(tl::ErrorCode::kInvalidArgument, std::string(name) + " is null");
  return s;
}

const tl::Hypergraph& graph(const tl_hypergraph* h, const char* name = "hypergraph") {
  return need(h, name).g;
}

Rational rat(const char* s, const char* name) {
  if (s == nullptr) tl::fail(tl::ErrorCode::kInvalidArgument, std::string(name) + " is null");
  return tl::parse_rational(s);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) {
  need_out(out, "report");
  *out = dup(j.dump(2));
}

void emit_handle(tl_hypergraph** out, tl::Hypergraph g) {
  need_out(out, "output handle");
  *out = new tl_hypergraph{std::move(g)};
}

tl::VertexWeighting weights(const tl::Hypergraph& h, const char* const* b) {
  if (b == nullptr) return tl::uniform_weighting(h.n());
  tl::VertexWeighting w;
  for (int v = 0; v < h.n(); ++v) w.push_back(rat(b[v], "weight"));
  return w;
}

Json walk_json(const tl::TightWalk& w) {
  Json j = tl::walk_to_json(w);
  j["length"] = w.length();
  return j;
}

Json tuple_json(const std::vector<tl::Vertex>& v) { return Json(v); }

Json edges_json(const tl::Hypergraph& h) {
  Json out = Json::array();
  for (tl::VertexSet e : h.edges()) out.push_back(tl::set_to_json(e));
  return out;
}

tl_outcome outcome_code(tl::SearchOutcome o) {
  switch (o) {
    case tl::SearchOutcome::kFound: return TL_FOUND;
    case tl::SearchOutcome::kExhausted: return TL_EXHAUSTED_NONE;
    case tl::SearchOutcome::kTimeout: return TL_TIMEOUT;
  }
  return TL_TIMEOUT;
}

Json hamilton_json(const tl::HamiltonResult& r) {
  Json j{{"outcome", tl::outcome_name(r.outcome)}, {"nodes", r.nodes}, {"seconds", r.seconds}};
  j["cycle"] = r.cycle ? walk_json(*r.cycle) : Json(nullptr);
  return j;
}

Json gadget_json(const tl::AbsorbingGadget& g) {
  Json p = Json::array(), q = Json::array();
  for (const auto& part : g.p) p.push_back(tuple_json(part));
  for (const auto& part : g.q) q.push_back(tuple_json(part));
  return Json{{"target", tuple_json(g.target)}, {"A", tuple_json(g.a)}, {"B", tuple_json(g.b)},
              {"C", tuple_json(g.c)},           {"P", p},                 {"Q", q},
              {"span", tl::set_size(g.span())}};
}

tl::SearchBudget budget_of(std::uint64_t nodes, double seconds) {
  tl::SearchBudget b;
  if (nodes > 0) b.max_nodes = nodes;
  if (seconds > 0) b.max_seconds = seconds;
  return b;
}

Json gradation_json(const tl::Gradation& g) {
  Json levels = Json::array();
  for (std::size_t j = 0; j < g.levels.size(); ++j)
    levels.push_back(Json{{"j", j + 1}, {"edges", g.levels[j].edge_count()},
                          {"density", tl::rational_to_json(tl::edge_density(g.levels[j]))}});
  return Json{{"beta", tl::rational_to_json(g.beta)}, {"root", g.root}, {"levels", levels}};
}

std::vector<Rational> rational_list(const Json& j) {
  std::vector<Rational> out;
  for (const Json& x : j) out.push_back(tl::rational_from_json(x));
  return out;
}

}  // namespace

extern "C" {

TL_API const char* tl_last_error(void) { return last_error.c_str(); }
TL_API const char* tl_version(void) { return "0.1.0"; }
TL_API void tl_string_free(char* s) { std::free(s); }

TL_API tl_status tl_hypergraph_create(int n, int k, const int* vertices, size_t edge_count, tl_hypergraph** out) {
  return guarded([&] {
    if (edge_count > 0 && vertices == nullptr) tl::fail(tl::ErrorCode::kInvalidArgument, "vertices is null");
    if (k < 1) tl::fail(tl::ErrorCode::kInvalidArgument, "k must be positive");
    std::vector<std::vector<int>> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges[i].assign(vertices + i * k, vertices + (i + 1) * k);
    emit_handle(out, tl::build_hypergraph(n, k, edges).graph);
  });
}

TL_API tl_status tl_hypergraph_parse(const char* text, tl_hypergraph** out) {
  return guarded([&] { emit_handle(out, tl::parse_hypergraph(str(text, "text")).graph); });
}

TL_API tl_status tl_hypergraph_load(const char* path, tl_hypergraph** out) {
  return guarded([&] { emit_handle(out, tl::load_hypergraph(str(path, "path")).graph); });
}

TL_API tl_status tl_hypergraph_save(const tl_hypergraph* h, const char* path) {
  return guarded([&] { tl::save_hypergraph(str(path, "path"), graph(h)); });
}

TL_API tl_status tl_hypergraph_to_json(const tl_hypergraph* h, char** out) {
  return guarded([&] {
    need_out(out, "output");
    *out = dup(tl::hypergraph_to_json(graph(h)).dump());
  });
}

TL_API void tl_hypergraph_free(tl_hypergraph* h) { delete h; }
TL_API int tl_hypergraph_n(const tl_hypergraph* h) { return h ? h->g.n() : 0; }
TL_API int tl_hypergraph_k(const tl_hypergraph* h) { return h ? h->g.k() : 0; }
TL_API size_t tl_hypergraph_edge_count(const tl_hypergraph* h) { return h ? h->g.edge_count() : 0; }

TL_API tl_status tl_hypergraph_edge(const tl_hypergraph* h, size_t i, int* vertices) {
  return guarded([&] {
    const tl::Hypergraph& g = graph(h);
    if (vertices == nullptr) tl::fail(tl::ErrorCode::kInvalidArgument, "vertices is null");
    if (i >= g.edge_count()) tl::fail(tl::ErrorCode::kOutOfRange, "edge index out of range");
    int pos = 0;
    for (tl::Vertex v : tl::members(g.edges()[i])) vertices[pos++] = v;
  });
}

TL_API tl_status tl_gen_complete(int n, int k, tl_hypergraph** out) {
  return guarded([&] { emit_handle(out, tl::gen_complete(n, k)); });
}

TL_API tl_status tl_gen_tight_cycle(int n, int k, tl_hypergraph** out) {
  return guarded([&] { emit_handle(out, tl::gen_tight_cycle(n, k)); });
}

TL_API tl_status tl_gen_random(int n, int k, const char* p, uint64_t seed, tl_hypergraph** out) {
  return guarded([&] { emit_handle(out, tl::gen_random(n, k, rat(p, "p"), seed)); });
}

TL_API tl_status tl_gen_space_barrier(int n, int k, int d, int allow_codegree, tl_hypergraph** out) {
  return guarded([&] { emit_handle(out, tl::gen_space_barrier(n, k, d, allow_codegree != 0)); });
}

TL_API tl_status tl_gen_random_min_degree(int n, int k, int d, const char* delta, uint64_t seed,
                                          tl_hypergraph** out) {
  return guarded([&] { emit_handle(out, tl::gen_random_min_degree(n, k, d, rat(delta, "delta"), seed)); });
}

TL_API tl_status tl_info(const tl_hypergraph* h, char** report) {
  return guarded([&] {
    const tl::Hypergraph& g = graph(h);
    Json degrees = Json::array();
    for (int d = 1; d <= g.k() - 1; ++d) {
      const tl::DegreeReport r = tl::degree_stats(g, d);
      degrees.push_back(Json{{"d", d},
                             {"min_degree", r.min_degree},
                             {"min_relative_degree", tl::rational_to_json(r.min_relative_degree)},
                             {"argmin", tl::set_to_json(r.argmin_set)}});
    }
    emit(report, Json{{"n", g.n()},
                      {"k", g.k()},
                      {"edges", g.edge_count()},
                      {"edge_density", tl::rational_to_json(tl::edge_density(g))},
                      {"support", tl::set_size(g.support())},
                      {"degrees", degrees}});
  });
}

TL_API tl_status tl_components(const tl_hypergraph* h, char** report) {
  return guarded([&] {
    const tl::Hypergraph& g = graph(h);
    const tl::ComponentPartition parts = tl::tight_components(g);
    Json comps = Json::array();
    for (std::size_t c = 0; c < parts.count(); ++c) {
      const tl::ComponentSummary& s = parts.summaries[c];
      comps.push_back(Json{{"id", c},
                           {"edges", s.edge_count},
                           {"shadow_edges", s.shadow_edge_count},
                           {"span", tl::set_to_json(s.span)},
                           {"edge_density", tl::rational_to_json(s.edge_density)},
                           {"shadow_density", tl::rational_to_json(s.shadow_density)},
                           {"edge_list", edges_json(parts.component(g, static_cast<int>(c)))}});
    }
    emit(report, Json{{"count", parts.count()}, {"components", comps}});
  });
}

TL_API tl_status tl_walk_mod(const tl_hypergraph* h, int residue, char** report) {
  return guarded([&] {
    const tl::Hypergraph& g = graph(h);
    const tl::ClosedWalkSearch s = tl::find_closed_walk(g, residue);
    Json comps = Json::array();
    for (const tl::StrongComponentInfo& c : s.components)
      comps.push_back(Json{{"representative", tuple_json(c.representative)},
                           {"size", c.size},
                           {"has_cycle", c.has_cycle},
                           {"period", c.period}});
    Json j{{"residue", residue}, {"found", s.walk.has_value()}};
    if (s.walk) {
      const tl::ShortenResult sh = tl::shorten_walk_mod_k(g, *s.walk);
      j["walk"] = walk_json(*s.walk);
      j["shortened"] = walk_json(sh.walk);
      j["excisions"] = sh.excisions;
    }
    j["strong_components"] = comps;
    emit(report, j);
  });
}

TL_API tl_status tl_switcher(const tl_hypergraph* h, char** report) {
  return guarded([&] {
    const tl::Hypergraph& g = graph(h);
    const auto sw = tl::find_switcher(g);
    Json j{{"found", sw.has_value()}};
    if (sw) {
      const tl::TightWalk loop = tl::switcher_loop(g, *sw);
      j["edge"] = tl::set_to_json(sw->edge);
      j["central"] = sw->central;
      j["witnesses"] = sw->witnesses;
      j["loop"] = walk_json(loop);
      j["strongly_connected"] = tl::is_strongly_connected(g);
    }
    emit(report, j);
  });
}

TL_API tl_status tl_matching(const tl_hypergraph* h, const char* const* b, char** report) {
  return guarded([&] {
    const tl::Hypergraph& g = graph(h);
    const tl::VertexWeighting w = weights(g, b);
    const tl::FractionalMatching m = tl::lp_matching(g, w);
    const std::string cert = tl::check_matching_certificate(g, w, m);
    Json edges = Json::array();
    for (std::size_t i = 0; i < m.weights.size(); ++i)
      if (m.weights[i] != 0)
        edges.push_back(Json{{"edge", tl::set_to_json(g.edges()[i])}, {"weight", tl::rational_to_json(m.weights[i])}});
    Json cover = Json::array();
    for (const Rational& c : m.cover) cover.push_back(tl::rational_to_json(c));
    emit(report, Json{{"nu", tl::rational_to_json(m.value)},
                      {"density", tl::rational_to_json(tl::matching_density(m, g.n()))},
                      {"certificate_ok", cert.empty()},
                      {"certificate_detail", cert},
                      {"matching", edges},
                      {"cover", cover}});
  });
}

TL_API tl_status tl_robust(const tl_hypergraph* h, const char* gamma, int corner_guard, int allow_sampling,
                           uint64_t seed, char** report) {
  return guarded([&] {
    tl::RobustOptions opt;
    if (corner_guard > 0) opt.corner_guard = corner_guard;
    opt.allow_sampling = allow_sampling != 0;
    opt.seed = seed;
    const tl::RobustReport r = tl::is_robustly_matchable(graph(h), rat(gamma, "gamma"), opt);
    Json j{{"robust", r.robust}, {"certified", r.certified}, {"mode", r.mode}, {"corners_checked", r.corners_checked}};
    if (r.failing_weighting) {
      Json b = Json::array();
      for (const Rational& x : *r.failing_weighting) b.push_back(tl::rational_to_json(x));
      j["failing_weighting"] = b;
    } else {
      j["failing_weighting"] = nullptr;
    }
    emit(report, j);
  });
}

TL_API tl_status tl_lifting(const tl_hypergraph* h, int d, const char* m, const char* const* b, char** report) {
  return guarded([&] {
    const tl::Hypergraph& g = graph(h);
    const tl::LiftingReport r = tl::verify_matching_lifting(g, d, rat(m, "m"), weights(g, b));
    Json levels = Json::array();
    for (const tl::LiftingLevel& l : r.levels)
      levels.push_back(Json{{"level", l.level},
                            {"sets", l.sets},
                            {"links_matched", l.links_matched},
                            {"size_condition", l.size_condition},
                            {"witness", l.witness ? tl::set_to_json(*l.witness) : Json(nullptr)}});
    emit(report, Json{{"d", r.d},
                      {"m", tl::rational_to_json(r.m)},
                      {"hypothesis", r.hypothesis},
                      {"conclusion", r.conclusion},
                      {"nu", tl::rational_to_json(r.nu)},
                      {"violated", r.violated()},
                      {"levels", levels}});
  });
}

TL_API tl_status tl_vicinity(const tl_hypergraph* r, int d, const char* strategy, const char* gamma,
                             const char* delta, char** report) {
  return guarded([&] {
    const tl::Hypergraph& g = graph(r);
    const std::string s = strategy ? strategy : "max-ratio";
    tl::SelectionStrategy st;
    if (s == "max-ratio")
      st = tl::SelectionStrategy::kMaxRatio;
    else if (s == "max-edges")
      st = tl::SelectionStrategy::kMaxEdges;
    else
      tl::fail(tl::ErrorCode::kInvalidArgument, "strategy must be max-ratio or max-edges");
    const tl::Selection sel = tl::select_vicinity(g, d, st);
    const tl::PropertyReport rep =
        tl::verify_hamilton_vicinity(g, sel.vicinity, rat(gamma, "gamma"), rat(delta, "delta"));
    Json j = tl::report_to_json(rep);
    j["strategy"] = s;
    j["vicinity"] = tl::vicinity_to_json(sel.vicinity);
    j["generated"] = tl::hypergraph_to_json(tl::generate_graph(sel.vicinity));
    emit(report, j);
  });
}

TL_API tl_status tl_framework(const tl_hypergraph* r, const tl_hypergraph* h, const char* alpha,
                              const char* gamma, const char* delta, int allow_sampling, char** report) {
  return guarded([&] {
    tl::FrameworkOptions opt;
    opt.robust.allow_sampling = allow_sampling != 0;
    const tl::PropertyReport rep = tl::verify_framework(graph(r, "R"), graph(h, "H"), rat(alpha, "alpha"),
                                                        rat(gamma, "gamma"), rat(delta, "delta"), opt);
    emit(report, tl::report_to_json(rep));
  });
}

TL_API tl_status tl_perturbed(const tl_hypergraph* r, int d, const char* alpha, const char* delta, char** report) {
  return guarded([&] {
    emit(report, tl::report_to_json(tl::verify_perturbed_degree(graph(r), d, rat(alpha, "alpha"), rat(delta, "delta"))));
  });
}

TL_API tl_status tl_clean(const tl_hypergraph* r, const tl_hypergraph* i, int d, const char* beta,
                          tl_hypergraph** r_clean, char** report) {
  return guarded([&] {
    const tl::Hypergraph& rg = graph(r, "R");
    const tl::CleaningResult c = tl::clean(rg, graph(i, "I"), d, rat(beta, "beta"));
    const tl::PropertyReport consistency = tl::verify_perturbed_degree(c.r_clean, d, c.alpha_star, c.delta_out);
    Json j{{"beta", tl::rational_to_json(c.beta)},
           {"d", d},
           {"certificate", "holds"},
           {"sets_checked", c.sets_checked},
           {"delta_out", tl::rational_to_json(c.delta_out)},
           {"alpha_star", tl::rational_to_json(c.alpha_star)},
           {"max_complement_density", tl::rational_to_json(c.max_complement_density)},
           {"max_complement_ratio", tl::rational_to_json(c.max_complement_ratio)},
           {"shadow_covers_complement", c.shadow_covers_complement},
           {"edges_in", rg.edge_count()},
           {"edges_out", c.r_clean.edge_count()},
           {"perturbation", tl::hypergraph_to_json(c.f)},
           {"gradation_of_I", gradation_json(c.gradation_of_i)},
           {"gradation_of_F", gradation_json(c.gradation_of_f)},
           {"perturbed_degree_check", tl::report_to_json(consistency)}};
    emit(report, j);
    if (r_clean != nullptr) *r_clean = new tl_hypergraph{c.r_clean};
  });
}

TL_API tl_status tl_hamilton(const tl_hypergraph* h, uint64_t max_nodes, double max_seconds, tl_outcome* outcome,
                             char** report) {
  return guarded([&] {
    const tl::HamiltonResult r = tl::find_tight_hamilton(graph(h), budget_of(max_nodes, max_seconds));
    if (outcome) *outcome = outcome_code(r.outcome);
    emit(report, hamilton_json(r));
  });
}

TL_API tl_status tl_cycle(const tl_hypergraph* h, int length, uint64_t max_nodes, double max_seconds,
                          tl_outcome* outcome, char** report) {
  return guarded([&] {
    const tl::HamiltonResult r = tl::find_tight_cycle(graph(h), length, budget_of(max_nodes, max_seconds));
    if (outcome) *outcome = outcome_code(r.outcome);
    Json j = hamilton_json(r);
    j["length"] = length;
    emit(report, j);
  });
}

TL_API tl_status tl_gadget(const tl_hypergraph* g, const int* target, uint64_t seed, tl_outcome* outcome,
                           char** report) {
  return guarded([&] {
    const tl::Hypergraph& host = graph(g);
    if (target == nullptr) tl::fail(tl::ErrorCode::kInvalidArgument, "target is null");
    const std::vector<tl::Vertex> t(target, target + host.k());
    tl::GadgetOptions opt;
    opt.seed = seed;
    const tl::GadgetSearch s = tl::find_absorbing_gadget(host, t, opt);
    if (outcome) *outcome = outcome_code(s.outcome);
    Json j{{"outcome", tl::outcome_name(s.outcome)}, {"nodes", s.nodes}, {"restarts", s.restarts_used}};
    if (s.gadget) {
      j["gadget"] = gadget_json(*s.gadget);
      const std::vector<tl::Vertex> path = tl::gadget_path(*s.gadget);
      const tl::SwapReport sw = tl::verify_absorption_swap(host, path, *s.gadget);
      j["fixture"] = Json{{"path", path}, {"swap_ok", sw.ok}, {"reason", sw.reason}, {"swapped", sw.swapped}};
    } else {
      j["gadget"] = nullptr;
    }
    emit(report, j);
  });
}

TL_API tl_status tl_thresholds(int k, int d, char** report) {
  return guarded([&] {
    const tl::ThresholdTable t = tl::threshold_formulas(k, d);
    const std::string order = tl::check_threshold_ordering(t);
    emit(report, Json{{"k", t.k},
                      {"d", t.d},
                      {"ell", t.ell},
                      {"upper_general", Json{{"form", "2^(-1/" + std::to_string(t.ell) + ")"},
                                             {"approx", t.upper_general.approx}}},
                      {"upper_linear", tl::rational_to_json(t.upper_linear)},
                      {"lower_construction", tl::rational_to_json(t.lower_construction)},
                      {"construction_limit", tl::rational_to_json(t.construction_limit)},
                      {"known_exact", t.known_exact ? tl::rational_to_json(*t.known_exact) : Json(nullptr)},
                      {"ordering_ok", order.empty()},
                      {"ordering_detail", order}});
  });
}

TL_API tl_status tl_scan_threshold(const char* config, char** rows_csv, char** cells_csv) {
  return guarded([&] {
    const Json c = Json::parse(str(config, "config"));
    tl::ScanConfig cfg;
    cfg.k = c.value("k", 3);
    cfg.d = c.value("d", 1);
    cfg.n_list = c.at("n").get<std::vector<int>>();
    cfg.grid = rational_list(c.at("grid"));
    cfg.trials = c.value("trials", 10);
    cfg.seed = c.value("seed", std::uint64_t{1});
    cfg.budget = budget_of(c.value("budget_nodes", std::uint64_t{0}), c.value("budget_seconds", 0.0));
    cfg.max_n = c.value("max_n", 14);
    cfg.anchors = c.value("anchors", false);
    const tl::ScanResult r = tl::scan_threshold(cfg);
    need_out(rows_csv, "rows output");
    *rows_csv = dup(tl::scan_rows_csv(r));
    if (cells_csv != nullptr) *cells_csv = dup(tl::scan_cells_csv(r));
  });
}

TL_API tl_status tl_eg_scan(const char* config, char** rows_csv, char** report) {
  return guarded([&] {
    const Json c = Json::parse(str(config, "config"));
    tl::EgConfig cfg;
    cfg.ell = c.value("ell", 2);
    cfg.n = c.value("n", 12);
    cfg.grid = rational_list(c.at("grid"));
    cfg.trials = c.value("trials", 10);
    cfg.seed = c.value("seed", std::uint64_t{1});
    const tl::EgResult r = tl::eg_scan(cfg);
    need_out(rows_csv, "rows output");
    *rows_csv = dup(tl::eg_rows_csv(r));
    if (report != nullptr)
      *report = dup(Json{{"ell", cfg.ell}, {"n", cfg.n}, {"rows", r.rows.size()}, {"all_items", r.all_items}}.dump(2));
  });
}

}  // extern "C"
