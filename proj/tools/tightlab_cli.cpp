// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tightlab/tightlab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;
constexpr int kExitNone = 3;
constexpr int kExitTimeout = 4;

struct CallError {
  std::string message;
};

void check(tl_status s) {
  if (s != TL_OK) throw CallError{tl_last_error()};
}

struct GraphDeleter {
  void operator()(tl_hypergraph* h) const { tl_hypergraph_free(h); }
};
using Graph = std::unique_ptr<tl_hypergraph, GraphDeleter>;

Graph load(const std::string& path) {
  tl_hypergraph* h = nullptr;
  check(tl_hypergraph_load(path.c_str(), &h));
  return Graph(h);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  tl_string_free(s);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CallError{"cannot write " + path};
  f << text;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  for (const std::string& x : split(s)) {
    try {
      out.push_back(std::stoi(x));
    } catch (const std::exception&) {
      throw CallError{"not an integer: " + x};
    }
  }
  return out;
}

// Emits the report and returns the exit code chosen from it.
int report(const std::string& text, bool ok) {
  std::cout << text << '\n';
  return ok ? 0 : kExitFailed;
}

int outcome_exit(tl_outcome o) {
  switch (o) {
    case TL_FOUND: return 0;
    case TL_EXHAUSTED_NONE: return kExitNone;
    case TL_TIMEOUT: return kExitTimeout;
  }
  return kExitError;
}

struct Weights {
  std::vector<std::string> items;
  std::vector<const char*> ptrs;

  const char* const* get(int n) {
    if (items.empty()) return nullptr;
    if (static_cast<int>(items.size()) != n) throw CallError{"need one weight per vertex"};
    ptrs.clear();
    for (const std::string& s : items) ptrs.push_back(s.c_str());
    return ptrs.data();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tightlab: tight cycles, components and thresholds in uniform hypergraphs"};
  app.require_subcommand(1);
  int code = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a hypergraph");
  gen->require_subcommand(1);
  int g_n = 0, g_k = 3, g_d = 1;
  std::string g_out, g_p = "1/2", g_min;
  std::uint64_t g_seed = 1;
  bool g_codegree = false;
  auto* gen_complete = gen->add_subcommand("complete", "complete k-graph");
  auto* gen_cycle = gen->add_subcommand("tight-cycle", "tight cycle on n vertices");
  auto* gen_barrier = gen->add_subcommand("space-barrier", "space barrier construction");
  auto* gen_random = gen->add_subcommand("random", "binomial random k-graph");
  for (auto* sub : {gen_complete, gen_cycle, gen_barrier, gen_random}) {
    sub->add_option("--n", g_n, "vertices")->required();
    sub->add_option("--k", g_k, "uniformity");
    sub->add_option("--out", g_out, "output file (.json or text)");
  }
  gen_barrier->add_option("--d", g_d, "degree level");
  gen_barrier->add_flag("--codegree", g_codegree, "allow d = k - 1");
  gen_random->add_option("--p", g_p, "edge probability p/q");
  gen_random->add_option("--seed", g_seed, "seed");
  gen_random->add_option("--min-degree", g_min, "repair to this minimum relative d-degree");
  gen_random->add_option("--d", g_d, "degree level for --min-degree");
  auto emit_graph = [&](tl_hypergraph* raw) {
    Graph h(raw);
    if (g_out.empty()) {
      char* s = nullptr;
      check(tl_hypergraph_to_json(h.get(), &s));
      std::cout << take(s) << '\n';
    } else {
      check(tl_hypergraph_save(h.get(), g_out.c_str()));
    }
  };
  gen_complete->callback([&] {
    tl_hypergraph* h = nullptr;
    check(tl_gen_complete(g_n, g_k, &h));
    emit_graph(h);
  });
  gen_cycle->callback([&] {
    tl_hypergraph* h = nullptr;
    check(tl_gen_tight_cycle(g_n, g_k, &h));
    emit_graph(h);
  });
  gen_barrier->callback([&] {
    tl_hypergraph* h = nullptr;
    check(tl_gen_space_barrier(g_n, g_k, g_d, g_codegree ? 1 : 0, &h));
    emit_graph(h);
  });
  gen_random->callback([&] {
    tl_hypergraph* h = nullptr;
    if (g_min.empty())
      check(tl_gen_random(g_n, g_k, g_p.c_str(), g_seed, &h));
    else
      check(tl_gen_random_min_degree(g_n, g_k, g_d, g_min.c_str(), g_seed, &h));
    emit_graph(h);
  });

  // Single-file analyses.
  std::string file;
  auto* info = app.add_subcommand("info", "size, density and minimum degrees");
  info->add_option("file", file)->required();
  info->callback([&] {
    char* s = nullptr;
    check(tl_info(load(file).get(), &s));
    code = report(take(s), true);
  });

  auto* comps = app.add_subcommand("components", "tight components");
  comps->add_option("file", file)->required();
  comps->callback([&] {
    char* s = nullptr;
    check(tl_components(load(file).get(), &s));
    code = report(take(s), true);
  });

  int residue = 1;
  auto* walk = app.add_subcommand("walk-mod", "closed tight walk of a given length mod k");
  walk->add_option("file", file)->required();
  walk->add_option("--residue", residue, "length mod k");
  walk->callback([&] {
    char* s = nullptr;
    check(tl_walk_mod(load(file).get(), residue, &s));
    const std::string text = take(s);
    code = report(text, Json::parse(text).at("found").get<bool>());
  });

  auto* sw = app.add_subcommand("switcher", "switcher and its closed walk");
  sw->add_option("file", file)->required();
  sw->callback([&] {
    char* s = nullptr;
    check(tl_switcher(load(file).get(), &s));
    const std::string text = take(s);
    code = report(text, Json::parse(text).at("found").get<bool>());
  });

  std::string weights_arg;
  Weights weights;
  auto* match = app.add_subcommand("matching", "fractional matching with its dual certificate");
  match->add_option("file", file)->required();
  match->add_option("--weights", weights_arg, "comma separated vertex weights");
  match->callback([&] {
    Graph h = load(file);
    weights.items = split(weights_arg);
    char* s = nullptr;
    check(tl_matching(h.get(), weights.get(tl_hypergraph_n(h.get())), &s));
    const std::string text = take(s);
    code = report(text, Json::parse(text).at("certificate_ok").get<bool>());
  });

  std::string gamma = "1/10", alpha = "1/10", delta = "1/2", beta = "1/4", m_arg = "1";
  int corner_guard = 16;
  bool sample = false;
  std::uint64_t seed = 1;
  auto* robust = app.add_subcommand("robust", "robust perfect fractional matchability");
  robust->add_option("file", file)->required();
  robust->add_option("--gamma", gamma);
  robust->add_option("--corner-guard", corner_guard, "most vertices for exhaustive corners");
  robust->add_flag("--sample", sample, "sample corners above the guard (not certified)");
  robust->add_option("--seed", seed);
  robust->callback([&] {
    char* s = nullptr;
    check(tl_robust(load(file).get(), gamma.c_str(), corner_guard, sample ? 1 : 0, seed, &s));
    const std::string text = take(s);
    code = report(text, Json::parse(text).at("robust").get<bool>());
  });

  int d = 1;
  auto* lifting = app.add_subcommand("lifting", "lift link matchings to a matching of the host");
  lifting->add_option("file", file)->required();
  lifting->add_option("--d", d);
  lifting->add_option("--m", m_arg);
  lifting->add_option("--weights", weights_arg);
  lifting->callback([&] {
    Graph h = load(file);
    weights.items = split(weights_arg);
    char* s = nullptr;
    check(tl_lifting(h.get(), d, m_arg.c_str(), weights.get(tl_hypergraph_n(h.get())), &s));
    const std::string text = take(s);
    code = report(text, !Json::parse(text).at("violated").get<bool>());
  });

  std::string strategy = "max-ratio";
  auto* vic = app.add_subcommand("vicinity", "select a vicinity and check it");
  vic->add_option("file", file)->required();
  vic->add_option("--d", d);
  vic->add_option("--strategy", strategy, "max-ratio or max-edges");
  vic->add_option("--gamma", gamma);
  vic->add_option("--delta", delta);
  vic->callback([&] {
    char* s = nullptr;
    check(tl_vicinity(load(file).get(), d, strategy.c_str(), gamma.c_str(), delta.c_str(), &s));
    const std::string text = take(s);
    code = report(text, Json::parse(text).at("passed").get<bool>());
  });

  std::string r_file, h_file;
  auto* frame = app.add_subcommand("framework", "check a Hamilton framework H inside R");
  frame->add_option("--host", r_file, "host graph R")->required();
  frame->add_option("--framework", h_file, "candidate framework H")->required();
  frame->add_option("--alpha", alpha);
  frame->add_option("--gamma", gamma);
  frame->add_option("--delta", delta);
  frame->add_flag("--sample", sample, "sample corners above the guard (not certified)");
  frame->callback([&] {
    char* s = nullptr;
    check(tl_framework(load(r_file).get(), load(h_file).get(), alpha.c_str(), gamma.c_str(), delta.c_str(),
                       sample ? 1 : 0, &s));
    const std::string text = take(s);
    code = report(text, Json::parse(text).at("passed").get<bool>());
  });

  auto* pert = app.add_subcommand("perturbed", "perturbed minimum relative degree");
  pert->add_option("file", file)->required();
  pert->add_option("--d", d);
  pert->add_option("--alpha", alpha);
  pert->add_option("--delta", delta);
  pert->callback([&] {
    char* s = nullptr;
    check(tl_perturbed(load(file).get(), d, alpha.c_str(), delta.c_str(), &s));
    const std::string text = take(s);
    code = report(text, Json::parse(text).at("passed").get<bool>());
  });

  std::string i_file, out_file, report_file;
  auto* cl = app.add_subcommand("clean", "remove I and its degree perturbation from R");
  cl->add_option("--input", r_file)->required();
  cl->add_option("--perturbed", i_file)->required();
  cl->add_option("--d", d);
  cl->add_option("--beta", beta);
  cl->add_option("--out", out_file, "where to write R'");
  cl->add_option("--report", report_file, "where to write the report (default stdout)");
  cl->callback([&] {
    tl_hypergraph* cleaned = nullptr;
    char* s = nullptr;
    check(tl_clean(load(r_file).get(), load(i_file).get(), d, beta.c_str(), &cleaned, &s));
    Graph out(cleaned);
    const std::string text = take(s);
    if (!out_file.empty()) check(tl_hypergraph_save(out.get(), out_file.c_str()));
    if (report_file.empty())
      std::cout << text << '\n';
    else
      write_text(report_file, text + "\n");
  });

  std::uint64_t budget_nodes = 0;
  double budget_secs = 0;
  auto* ham = app.add_subcommand("hamilton", "exhaustive tight Hamilton cycle search");
  ham->add_option("file", file)->required();
  ham->add_option("--budget-nodes", budget_nodes, "node limit (default 1e8)");
  ham->add_option("--budget-secs", budget_secs, "time limit (default 60)");
  ham->callback([&] {
    tl_outcome o = TL_TIMEOUT;
    char* s = nullptr;
    check(tl_hamilton(load(file).get(), budget_nodes, budget_secs, &o, &s));
    std::cout << take(s) << '\n';
    code = outcome_exit(o);
  });

  int length = 0;
  auto* cyc = app.add_subcommand("cycle", "tight cycle of a given length");
  cyc->add_option("file", file)->required();
  cyc->add_option("--length", length)->required();
  cyc->add_option("--budget-nodes", budget_nodes);
  cyc->add_option("--budget-secs", budget_secs);
  cyc->callback([&] {
    tl_outcome o = TL_TIMEOUT;
    char* s = nullptr;
    check(tl_cycle(load(file).get(), length, budget_nodes, budget_secs, &o, &s));
    std::cout << take(s) << '\n';
    code = outcome_exit(o);
  });

  std::string target;
  auto* gad = app.add_subcommand("gadget", "absorbing gadget for a k-set");
  gad->add_option("file", file)->required();
  gad->add_option("--target", target, "comma separated k vertices")->required();
  gad->add_option("--seed", seed);
  gad->callback([&] {
    Graph h = load(file);
    const std::vector<int> t = split_ints(target);
    if (static_cast<int>(t.size()) != tl_hypergraph_k(h.get())) throw CallError{"target needs k vertices"};
    tl_outcome o = TL_TIMEOUT;
    char* s = nullptr;
    check(tl_gadget(h.get(), t.data(), seed, &o, &s));
    std::cout << take(s) << '\n';
    code = outcome_exit(o);
  });

  int t_k = 3, t_d = 1;
  auto* thr = app.add_subcommand("thresholds", "threshold bounds for (k, d)");
  thr->add_option("--k", t_k);
  thr->add_option("--d", t_d);
  thr->callback([&] {
    char* s = nullptr;
    check(tl_thresholds(t_k, t_d, &s));
    const std::string text = take(s);
    code = report(text, Json::parse(text).at("ordering_ok").get<bool>());
  });

  std::string n_list = "8,9", grid = "0,1/2,1", cells_file;
  int trials = 10, max_n = 14;
  bool anchors = false;
  auto* scan = app.add_subcommand("scan-threshold", "Hamiltonicity rate over a degree grid");
  scan->add_option("--k", t_k);
  scan->add_option("--d", t_d);
  scan->add_option("--n", n_list, "comma separated sizes");
  scan->add_option("--grid", grid, "comma separated degrees p/q");
  scan->add_option("--trials", trials);
  scan->add_option("--seed", seed);
  scan->add_option("--budget-nodes", budget_nodes);
  scan->add_option("--budget-secs", budget_secs);
  scan->add_option("--max-n", max_n);
  scan->add_flag("--anchors", anchors, "add space-barrier control rows");
  scan->add_option("--out", out_file, "row CSV (default stdout)");
  scan->add_option("--cells", cells_file, "per-cell rate CSV");
  scan->callback([&] {
    const Json cfg{{"k", t_k},
                   {"d", t_d},
                   {"n", split_ints(n_list)},
                   {"grid", split(grid)},
                   {"trials", trials},
                   {"seed", seed},
                   {"budget_nodes", budget_nodes},
                   {"budget_seconds", budget_secs},
                   {"max_n", max_n},
                   {"anchors", anchors}};
    char* rows = nullptr;
    char* cells = nullptr;
    check(tl_scan_threshold(cfg.dump().c_str(), &rows, &cells));
    write_text(out_file, take(rows));
    const std::string cell_text = take(cells);
    if (!cells_file.empty()) write_text(cells_file, cell_text);
    else if (!out_file.empty()) std::cout << cell_text;
  });

  int ell = 2, eg_n = 12;
  auto* eg = app.add_subcommand("eg-scan", "component margins of random l-graphs");
  eg->add_option("--ell", ell);
  eg->add_option("--n", eg_n);
  eg->add_option("--grid", grid);
  eg->add_option("--trials", trials);
  eg->add_option("--seed", seed);
  eg->add_option("--out", out_file, "row CSV (default stdout)");
  eg->callback([&] {
    const Json cfg{{"ell", ell}, {"n", eg_n}, {"grid", split(grid)}, {"trials", trials}, {"seed", seed}};
    char* rows = nullptr;
    char* summary = nullptr;
    check(tl_eg_scan(cfg.dump().c_str(), &rows, &summary));
    write_text(out_file, take(rows));
    const std::string text = take(summary);
    if (!out_file.empty()) std::cout << text << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  } catch (const CallError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return code;
}
