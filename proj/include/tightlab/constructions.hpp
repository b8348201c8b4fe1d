#ifndef TIGHTLAB_CONSTRUCTIONS_HPP
#define TIGHTLAB_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tightlab/hamilton.hpp"
#include "tightlab/hypergraph.hpp"

namespace tl {

struct SpaceBarrierShape {
  int ell = 0;
  Rational ratio;      // ceil(ell / 2) / (ell + 1)
  int x_size = 0;      // floor(ratio * n); X = {0..x_size-1}
  Rational deviation;  // x_size - ratio * n
  int j = 0;           // forbidden intersection size
};

/// Shape of the space barrier. d = k - 1 is accepted only with
/// `allow_codegree`; there both j and j + 1 satisfy the defining inequalities
/// and the smaller is taken.
SpaceBarrierShape space_barrier_shape(int n, int k, int d, bool allow_codegree = false);

/// All k-sets S with |S & X| != j.
Hypergraph gen_space_barrier(int n, int k, int d, bool allow_codegree = false);

/// Minimum relative d-degree of gen_space_barrier(n, k, d) by counting the
/// missing extensions of a d-set by how many of its vertices lie in X.
Rational space_barrier_min_degree(int n, int k, int d, bool allow_codegree = false);

/// n -> infinity limit of space_barrier_min_degree: 1 minus the largest
/// term C(ell, i) c^i (1 - c)^(ell - i) over j - d <= i <= j, c = ratio.
Rational space_barrier_limit(int k, int d);

/// 2^{-1/ell}, kept as the exact statement x <= 2^{-1/ell} <=> 2 x^ell <= 1.
struct RootBound {
  int ell = 1;
  double approx = 0.0;
  /// Sign of x - 2^{-1/ell} for x >= 0.
  int compare(const Rational& x) const;
};

struct ThresholdTable {
  int k = 0, d = 0, ell = 0;
  RootBound upper_general;
  Rational upper_linear;
  Rational lower_construction;
  Rational construction_limit;  // derived limit of the space barrier
  std::optional<Rational> known_exact;
};

ThresholdTable threshold_formulas(int k, int d);

/// Empty string when lower <= known_exact <= both uppers and
/// upper_general <= upper_linear, all compared exactly.
std::string check_threshold_ordering(const ThresholdTable& t);

/// gen_random(n, k, delta, seed) followed by repair: while some d-set has
/// relative degree below delta, the lexicographically least missing edge
/// through the worst such d-set (least among ties) is added. The output
/// distribution is not uniform over graphs of that minimum degree.
Hypergraph gen_random_min_degree(int n, int k, int d, const Rational& delta, std::uint64_t seed);

struct ScanConfig {
  int k = 3, d = 1;
  std::vector<int> n_list;
  std::vector<Rational> grid;
  int trials = 10;
  std::uint64_t seed = 1;
  SearchBudget budget;
  int max_n = 14;
  bool anchors = false;  // add a space-barrier control row for each n
};

struct ScanRow {
  std::string kind;  // "random" or "space-barrier"
  int n = 0, k = 0, d = 0;
  Rational delta;
  int trial = 0;
  std::uint64_t seed = 0;
  Rational min_degree;
  SearchOutcome outcome = SearchOutcome::kExhausted;
  std::uint64_t nodes = 0;
};

struct ScanCell {
  int n = 0;
  Rational delta;
  int trials = 0, found = 0, exhausted = 0, timeouts = 0;
  Rational rate;  // found / trials
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::vector<ScanCell> cells;  // random rows only, in (n, grid) order
};

/// Seed of one trial, a hash of (master seed, n, delta, trial).
std::uint64_t trial_seed(std::uint64_t seed, int n, const Rational& delta, int trial);

ScanResult scan_threshold(const ScanConfig& config);

/// Row CSV; the first line names the schema version.
std::string scan_rows_csv(const ScanResult& r);
std::string scan_cells_csv(const ScanResult& r);

struct EgConfig {
  int ell = 2;
  int n = 12;
  std::vector<Rational> grid;
  int trials = 10;
  std::uint64_t seed = 1;
};

struct EgRow {
  Rational p;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string strategy;  // "max-edges" or "max-ratio"
  std::size_t components = 0;
  std::size_t edges = 0;
  Rational nu;               // fractional matching number of the component
  Rational matching_margin;  // nu / n - 1 / (ell + 1)
  Rational edge_density;     // e(C) / C(n, ell)
  Rational density_margin;   // against 4/9 for ell = 2, 1/2 for ell = 3
  std::optional<bool> common_edge;  // ell = 2: shares an edge with the paired trial
};

struct EgResult {
  std::vector<EgRow> rows;
  std::size_t all_items = 0;  // rows meeting every item with positive margins
};

EgResult eg_scan(const EgConfig& config);
std::string eg_rows_csv(const EgResult& r);

}  // namespace tl

#endif
