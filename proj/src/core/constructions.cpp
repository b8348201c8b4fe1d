#include "tightlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tightlab/error.hpp"
#include "tightlab/matching.hpp"
#include "tightlab/random.hpp"
#include "tightlab/tight.hpp"

namespace tl {
namespace {

constexpr std::uint64_t kGeneratorLimit = std::uint64_t{1} << 22;

Rational power(const Rational& x, int e) {
  Rational p = 1;
  for (int i = 0; i < e; ++i) p *= x;
  return p;
}

}  // namespace

SpaceBarrierShape space_barrier_shape(int n, int k, int d, bool allow_codegree) {
  if (k < 2 || k > kMaxVertices) fail(ErrorCode::kOutOfRange, "space barrier needs 2 <= k <= 64");
  if (d < 1 || d > k - 1) fail(ErrorCode::kOutOfRange, "space barrier needs 1 <= d <= k-1");
  if (d == k - 1 && !allow_codegree)
    fail(ErrorCode::kOutOfRange, "space barrier needs d <= k-2 unless the codegree variant is requested");
  if (n < 2 * k) fail(ErrorCode::kOutOfRange, "space barrier needs n >= 2k");
  SpaceBarrierShape s;
  s.ell = k - d;
  s.ratio = Rational((s.ell + 1) / 2, s.ell + 1);
  const Rational exact = s.ratio * n;
  s.x_size = static_cast<int>(BigInt(numerator(exact) / denominator(exact)));
  s.deviation = Rational(s.x_size) - exact;
  s.j = -1;
  for (int j = 0; j <= k && s.j < 0; ++j)
    if (Rational(j - 1, k) < s.ratio && s.ratio < Rational(j + 1, k)) s.j = j;
  if (s.j < 0) fail(ErrorCode::kOutOfRange, "no admissible intersection size");
  return s;
}

Hypergraph gen_space_barrier(int n, int k, int d, bool allow_codegree) {
  const SpaceBarrierShape s = space_barrier_shape(n, k, d, allow_codegree);
  if (n > kMaxVertices) fail(ErrorCode::kOutOfRange, "space barrier graphs need n <= 64");
  if (small_binomial(n, k) > kGeneratorLimit) fail(ErrorCode::kGuardExceeded, "space barrier too large to list");
  const VertexSet x = full_set(s.x_size);
  std::vector<VertexSet> edges;
  for (VertexSet e : subsets_lex(n, k))
    if (set_size(e & x) != s.j) edges.push_back(e);
  return Hypergraph(n, k, std::move(edges));
}

Rational space_barrier_min_degree(int n, int k, int d, bool allow_codegree) {
  const SpaceBarrierShape s = space_barrier_shape(n, k, d, allow_codegree);
  const int x = s.x_size, l = s.ell;
  const BigInt total = binomial(n - d, l);
  std::optional<Rational> best;
  for (int a = 0; a <= d; ++a) {
    if (a > x || d - a > n - x) continue;
    const BigInt bad = binomial(x - a, s.j - a) * binomial(n - x - (d - a), l - (s.j - a));
    const Rational rel(total - bad, total);
    if (!best || rel < *best) best = rel;
  }
  return *best;
}

Rational space_barrier_limit(int k, int d) {
  if (k < 2 || d < 1 || d > k - 1) fail(ErrorCode::kOutOfRange, "limit needs 1 <= d <= k-1");
  const int l = k - d;
  const Rational c((l + 1) / 2, l + 1);
  int j = -1;
  for (int t = 0; t <= k && j < 0; ++t)
    if (Rational(t - 1, k) < c && c < Rational(t + 1, k)) j = t;
  Rational worst = 0;
  for (int i = std::max(0, j - d); i <= std::min(l, j); ++i) {
    const Rational term = Rational(binomial(l, i)) * power(c, i) * power(1 - c, l - i);
    worst = std::max(worst, term);
  }
  return 1 - worst;
}

int RootBound::compare(const Rational& x) const {
  const Rational lhs = 2 * power(x, ell);
  return lhs < 1 ? -1 : (lhs > 1 ? 1 : 0);
}

ThresholdTable threshold_formulas(int k, int d) {
  if (k < 2 || k > kMaxVertices || d < 1 || d > k - 1)
    fail(ErrorCode::kOutOfRange, "thresholds need 1 <= d <= k-1");
  ThresholdTable t;
  t.k = k;
  t.d = d;
  t.ell = k - d;
  t.upper_general.ell = t.ell;
  t.upper_general.approx = std::pow(2.0, -1.0 / t.ell);
  t.upper_linear = 1 - Rational(1, 2 * t.ell);
  t.construction_limit = space_barrier_limit(k, d);
  static const Rational kStated[] = {Rational(1, 2), Rational(5, 9), Rational(5, 8), Rational(408, 625)};
  t.lower_construction = t.ell <= 4 ? kStated[t.ell - 1] : t.construction_limit;
  if (t.ell == 1) t.known_exact = Rational(1, 2);
  if (t.ell == 2) t.known_exact = Rational(5, 9);
  return t;
}

std::string check_threshold_ordering(const ThresholdTable& t) {
  if (t.upper_general.compare(t.upper_linear) < 0) return "2^(-1/l) exceeds 1 - 1/(2l)";
  if (t.upper_general.compare(t.lower_construction) > 0) return "lower bound exceeds 2^(-1/l)";
  if (t.lower_construction > t.upper_linear) return "lower bound exceeds 1 - 1/(2l)";
  if (t.known_exact) {
    if (t.lower_construction > *t.known_exact) return "lower bound exceeds the known value";
    if (t.upper_general.compare(*t.known_exact) > 0) return "known value exceeds 2^(-1/l)";
    if (*t.known_exact > t.upper_linear) return "known value exceeds 1 - 1/(2l)";
  }
  return {};
}

Hypergraph gen_random_min_degree(int n, int k, int d, const Rational& delta, std::uint64_t seed) {
  if (delta < 0 || delta > 1) fail(ErrorCode::kInvalidArgument, "delta must lie in [0, 1]");
  if (k < 2 || d < 1 || d > k - 1) fail(ErrorCode::kInvalidArgument, "need 1 <= d <= k-1");
  if (n < k || small_binomial(n, k) > kGeneratorLimit) fail(ErrorCode::kGuardExceeded, "graph too large to repair");
  const Hypergraph start = gen_random(n, k, delta, seed);
  std::vector<char> present(static_cast<std::size_t>(small_binomial(n, k)), 0);
  for (VertexSet e : start.edges()) present[colex_rank(e)] = 1;
  std::vector<std::uint64_t> deg = degree_table(start, d);
  const Rational need = delta * Rational(binomial(n - d, k - d));
  std::vector<VertexSet> added;
  while (true) {
    std::size_t worst = 0;
    for (std::size_t r = 1; r < deg.size(); ++r)
      if (deg[r] < deg[worst] ||
          (deg[r] == deg[worst] && lex_less(colex_unrank(r, d), colex_unrank(worst, d))))
        worst = r;
    if (Rational(static_cast<long long>(deg[worst])) >= need) break;
    const VertexSet s = colex_unrank(worst, d);
    const std::vector<Vertex> rest = members(full_set(n) & ~s);
    bool grown = false;
    for (VertexSet pick : subsets_lex(n - d, k - d)) {
      VertexSet e = s;
      for (Vertex i : members(pick)) e |= singleton(rest[static_cast<std::size_t>(i)]);
      const std::uint64_t rank = colex_rank(e);
      if (present[rank]) continue;
      present[rank] = 1;
      added.push_back(e);
      for_each_subset_of(e, d, [&](VertexSet sub) { ++deg[colex_rank(sub)]; });
      grown = true;
      break;
    }
    if (!grown) fail(ErrorCode::kCertificateViolation, "repair found no missing edge");
  }
  std::vector<VertexSet> edges = start.edges();
  edges.insert(edges.end(), added.begin(), added.end());
  Hypergraph out(n, k, std::move(edges));
  if (degree_stats(out, d).min_relative_degree < delta)
    fail(ErrorCode::kCertificateViolation, "repaired graph misses the degree target");
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, int n, const Rational& delta, int trial) {
  std::uint64_t h = 0;
  for (char ch : to_string(delta)) h = mix64(h ^ static_cast<unsigned char>(ch));
  return counter_hash({seed, static_cast<std::uint64_t>(n), h, static_cast<std::uint64_t>(trial)});
}

ScanResult scan_threshold(const ScanConfig& cfg) {
  if (cfg.trials < 1) fail(ErrorCode::kInvalidArgument, "scan needs at least one trial");
  for (int n : cfg.n_list)
    if (n < cfg.k + 1 || n > cfg.max_n)
      fail(ErrorCode::kOutOfRange, "scan size " + std::to_string(n) + " outside [k + 1, max_n]");
  ScanResult res;
  for (int n : cfg.n_list) {
    for (const Rational& delta : cfg.grid) {
      ScanCell cell;
      cell.n = n;
      cell.delta = delta;
      for (int t = 0; t < cfg.trials; ++t) {
        ScanRow row;
        row.kind = "random";
        row.n = n;
        row.k = cfg.k;
        row.d = cfg.d;
        row.delta = delta;
        row.trial = t;
        row.seed = trial_seed(cfg.seed, n, delta, t);
        const Hypergraph h = gen_random_min_degree(n, cfg.k, cfg.d, delta, row.seed);
        row.min_degree = degree_stats(h, cfg.d).min_relative_degree;
        const HamiltonResult hr = find_tight_hamilton(h, cfg.budget);
        row.outcome = hr.outcome;
        row.nodes = hr.nodes;
        ++cell.trials;
        if (hr.outcome == SearchOutcome::kFound) ++cell.found;
        if (hr.outcome == SearchOutcome::kExhausted) ++cell.exhausted;
        if (hr.outcome == SearchOutcome::kTimeout) ++cell.timeouts;
        res.rows.push_back(std::move(row));
      }
      cell.rate = Rational(cell.found, cell.trials);
      res.cells.push_back(std::move(cell));
    }
    if (cfg.anchors && cfg.d <= cfg.k - 2 && n >= 2 * cfg.k) {
      ScanRow row;
      row.kind = "space-barrier";
      row.n = n;
      row.k = cfg.k;
      row.d = cfg.d;
      const Hypergraph h = gen_space_barrier(n, cfg.k, cfg.d);
      row.min_degree = degree_stats(h, cfg.d).min_relative_degree;
      row.delta = row.min_degree;
      const HamiltonResult hr = find_tight_hamilton(h, cfg.budget);
      row.outcome = hr.outcome;
      row.nodes = hr.nodes;
      res.rows.push_back(std::move(row));
    }
  }
  return res;
}

std::string scan_rows_csv(const ScanResult& r) {
  std::ostringstream out;
  out << "# tightlab-scan v1\n";
  out << "kind,n,k,d,delta,trial,seed,min_degree,outcome,runtime_nodes\n";
  for (const ScanRow& row : r.rows)
    out << row.kind << ',' << row.n << ',' << row.k << ',' << row.d << ',' << to_string(row.delta) << ','
        << row.trial << ',' << row.seed << ',' << to_string(row.min_degree) << ',' << outcome_name(row.outcome)
        << ',' << row.nodes << '\n';
  return out.str();
}

std::string scan_cells_csv(const ScanResult& r) {
  std::ostringstream out;
  out << "# tightlab-scan-cells v1\n";
  out << "n,delta,trials,found,exhausted_none,timeout,rate\n";
  for (const ScanCell& c : r.cells)
    out << c.n << ',' << to_string(c.delta) << ',' << c.trials << ',' << c.found << ',' << c.exhausted << ','
        << c.timeouts << ',' << to_string(c.rate) << '\n';
  return out.str();
}

EgResult eg_scan(const EgConfig& cfg) {
  const int l = cfg.ell, n = cfg.n;
  if (l != 2 && l != 3) fail(ErrorCode::kOutOfRange, "eg scan supports ell in {2, 3}");
  if (n < l + 1 || n > (l == 2 ? 30 : 14)) fail(ErrorCode::kOutOfRange, "eg scan size out of range");
  if (cfg.trials < 1) fail(ErrorCode::kInvalidArgument, "eg scan needs at least one trial");
  const Rational matching_target(1, l + 1);
  const Rational density_target = l == 2 ? Rational(4, 9) : Rational(1, 2);
  const Rational all = Rational(binomial(n, l));
  EgResult res;
  for (const Rational& p : cfg.grid) {
    for (const char* strategy : {"max-edges", "max-ratio"}) {
      const bool by_ratio = std::string(strategy) == "max-ratio";
      std::vector<Hypergraph> chosen;
      const std::size_t first_row = res.rows.size();
      for (int t = 0; t < cfg.trials; ++t) {
        EgRow row;
        row.p = p;
        row.trial = t;
        row.seed = trial_seed(cfg.seed, n, p, t);
        row.strategy = strategy;
        const Hypergraph g = gen_random(n, l, p, row.seed);
        const ComponentPartition parts = tight_components(g);
        row.components = parts.count();
        int best = -1;
        for (std::size_t c = 0; c < parts.count(); ++c) {
          const ComponentSummary& s = parts.summaries[c];
          if (best < 0) {
            best = static_cast<int>(c);
            continue;
          }
          const ComponentSummary& b = parts.summaries[static_cast<std::size_t>(best)];
          const bool better = by_ratio ? BigInt(s.edge_count) * b.shadow_edge_count >
                                             BigInt(b.edge_count) * s.shadow_edge_count
                                       : s.edge_count > b.edge_count;
          if (better) best = static_cast<int>(c);
        }
        Hypergraph comp(n, l, {});
        if (best >= 0) comp = parts.component(g, best);
        row.edges = comp.edge_count();
        row.nu = lp_matching(comp, uniform_weighting(n)).value;
        row.matching_margin = row.nu / n - matching_target;
        row.edge_density = Rational(static_cast<long long>(row.edges)) / all;
        row.density_margin = row.edge_density - density_target;
        chosen.push_back(std::move(comp));
        res.rows.push_back(std::move(row));
      }
      if (l == 2) {
        for (int t = 0; t + 1 < cfg.trials; t += 2) {
          const Hypergraph common = edge_difference(chosen[t], edge_difference(chosen[t], chosen[t + 1]));
          const bool shared = !common.empty();
          res.rows[first_row + t].common_edge = shared;
          res.rows[first_row + t + 1].common_edge = shared;
        }
      }
    }
  }
  for (const EgRow& row : res.rows)
    if (row.components > 0 && row.matching_margin > 0 && row.density_margin > 0 && row.common_edge != false)
      ++res.all_items;
  return res;
}

std::string eg_rows_csv(const EgResult& r) {
  std::ostringstream out;
  out << "# tightlab-eg v1\n";
  out << "p,trial,seed,strategy,components,edges,nu,matching_margin,edge_density,density_margin,common_edge\n";
  for (const EgRow& row : r.rows) {
    out << to_string(row.p) << ',' << row.trial << ',' << row.seed << ',' << row.strategy << ','
        << row.components << ',' << row.edges << ',' << to_string(row.nu) << ','
        << to_string(row.matching_margin) << ',' << to_string(row.edge_density) << ','
        << to_string(row.density_margin) << ',';
    if (row.common_edge) out << (*row.common_edge ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

}  // namespace tl
