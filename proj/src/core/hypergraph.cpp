#include "tightlab/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <unordered_map>

#include "tightlab/error.hpp"
#include "tightlab/random.hpp"

namespace tl {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  BinomialTable() {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int r = 1; r <= n; ++r) {
        const std::uint64_t a = c[n - 1][r - 1];
        const std::uint64_t b = r <= n - 1 ? c[n - 1][r] : 0;
        c[n][r] = (a > kMax - b) ? kMax : a + b;
      }
    }
  }
};

const BinomialTable& binomials() {
  static const BinomialTable table;
  return table;
}

void sort_lex(std::vector<VertexSet>& edges) {
  std::sort(edges.begin(), edges.end(), lex_less);
}

}  // namespace

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(set_size(s));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet to_set(std::span<const Vertex> vertices) {
  VertexSet s = 0;
  for (Vertex v : vertices) s |= singleton(v);
  return s;
}

std::uint64_t small_binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n || n > 64) return 0;
  return binomials().c[n][r];
}

std::uint64_t colex_rank(VertexSet s) {
  std::uint64_t rank = 0;
  int i = 1;
  while (s) {
    rank += small_binomial(std::countr_zero(s), i++);
    s &= s - 1;
  }
  return rank;
}

VertexSet colex_unrank(std::uint64_t rank, int r) {
  VertexSet s = 0;
  for (int i = r; i >= 1; --i) {
    int c = i - 1;
    while (small_binomial(c + 1, i) <= rank) ++c;
    rank -= small_binomial(c, i);
    s |= singleton(c);
  }
  return s;
}

std::vector<VertexSet> subsets_lex(int n, int r) {
  std::vector<VertexSet> out;
  for_each_subset_of(full_set(n), r, [&](VertexSet s) { out.push_back(s); });
  sort_lex(out);
  return out;
}

Hypergraph::Hypergraph(int n, int k, std::vector<VertexSet> edges) : n_(n), k_(k) {
  if (n < 0 || n > kMaxVertices)
    fail(ErrorCode::kOutOfRange, "vertex count " + std::to_string(n) + " outside 0..64");
  if (k < 0) fail(ErrorCode::kInvalidArgument, "negative uniformity");
  const VertexSet ground = full_set(n);
  for (VertexSet e : edges) {
    if ((e & ~ground) != 0)
      fail(ErrorCode::kOutOfRange,
           "vertex " + std::to_string(63 - std::countl_zero(e)) + " out of range");
    if (set_size(e) != k)
      fail(ErrorCode::kInvalidArgument, "edge of size " + std::to_string(set_size(e)) +
                                            " in a " + std::to_string(k) + "-graph");
  }
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  duplicates_ = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  by_value_ = edges;
  edges_ = std::move(edges);
  sort_lex(edges_);
  const std::uint64_t slots = small_binomial(n, k);
  if (slots > 0 && slots <= kDenseLimit) {
    dense_.assign((slots + 63) / 64, 0);
    for (VertexSet e : edges_) {
      const std::uint64_t r = colex_rank(e);
      dense_[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
  }
}

bool Hypergraph::contains(VertexSet e) const {
  if (set_size(e) != k_ || (e & ~full_set(n_)) != 0) return false;
  if (!dense_.empty()) {
    const std::uint64_t r = colex_rank(e);
    return (dense_[r >> 6] >> (r & 63)) & 1U;
  }
  return std::binary_search(by_value_.begin(), by_value_.end(), e);
}

VertexSet Hypergraph::support() const {
  VertexSet s = 0;
  for (VertexSet e : edges_) s |= e;
  return s;
}

BuildResult build_hypergraph(int n, int k, const std::vector<std::vector<int>>& edges) {
  if (n < 0 || n > kMaxVertices)
    fail(ErrorCode::kOutOfRange, "vertex count " + std::to_string(n) + " outside 0..64");
  if (k < 0 || (k > n && !edges.empty()))
    fail(ErrorCode::kInvalidArgument, "uniformity " + std::to_string(k) + " invalid for n = " +
                                          std::to_string(n));
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& tuple = edges[i];
    if (static_cast<int>(tuple.size()) != k)
      fail(ErrorCode::kInvalidArgument, "edge " + std::to_string(i) + " has " +
                                            std::to_string(tuple.size()) + " vertices, expected " +
                                            std::to_string(k));
    VertexSet s = 0;
    for (int v : tuple) {
      if (v < 0 || v >= n)
        fail(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " out of range");
      if (has_vertex(s, v))
        fail(ErrorCode::kInvalidArgument,
             "edge " + std::to_string(i) + " repeats vertex " + std::to_string(v));
      s |= singleton(v);
    }
    sets.push_back(s);
  }
  Hypergraph g(n, k, std::move(sets));
  const std::size_t dups = g.duplicates_dropped();
  return {std::move(g), dups};
}

Hypergraph shadow(const Hypergraph& h, int j) {
  if (j < 1 || j > h.k())
    fail(ErrorCode::kOutOfRange, "shadow level " + std::to_string(j) + " outside 1.." +
                                     std::to_string(h.k()));
  std::vector<VertexSet> out;
  for (VertexSet e : h.edges())
    for_each_subset_of(e, j, [&](VertexSet s) { out.push_back(s); });
  return Hypergraph(h.n(), j, std::move(out));
}

Hypergraph link(const Hypergraph& h, VertexSet s) {
  const int d = set_size(s);
  if ((s & ~full_set(h.n())) != 0)
    fail(ErrorCode::kOutOfRange, "link set is not a set of vertices of the host");
  if (d >= h.k())
    fail(ErrorCode::kInvalidArgument, "link set of size " + std::to_string(d) +
                                          " in a " + std::to_string(h.k()) + "-graph");
  std::vector<VertexSet> out;
  for (VertexSet e : h.edges())
    if ((e & s) == s) out.push_back(e & ~s);
  return Hypergraph(h.n(), h.k() - d, std::move(out));
}

std::uint64_t degree(const Hypergraph& h, VertexSet s) {
  std::uint64_t count = 0;
  for (VertexSet e : h.edges())
    if ((e & s) == s) ++count;
  return count;
}

Rational relative_degree(const Hypergraph& h, VertexSet s) {
  const int d = set_size(s);
  const BigInt denom = binomial(h.n() - d, h.k() - d);
  if (denom == 0) fail(ErrorCode::kInvalidArgument, "relative degree undefined: no extensions");
  return Rational(BigInt(degree(h, s)), denom);
}

std::vector<std::uint64_t> degree_table(const Hypergraph& h, int d) {
  const std::uint64_t slots = small_binomial(h.n(), d);
  if (slots > kDenseLimit)
    fail(ErrorCode::kGuardExceeded, "too many " + std::to_string(d) + "-sets for a degree table");
  std::vector<std::uint64_t> table(slots, 0);
  for (VertexSet e : h.edges())
    for_each_subset_of(e, d, [&](VertexSet s) { ++table[colex_rank(s)]; });
  return table;
}

DegreeReport degree_stats(const Hypergraph& h, int d, bool shadow_only) {
  if (d < 1 || d > h.k() - 1)
    fail(ErrorCode::kOutOfRange, "degree level " + std::to_string(d) + " outside 1.." +
                                     std::to_string(h.k() - 1));
  if (h.n() <= d) fail(ErrorCode::kInvalidArgument, "degenerate vertex count n <= d");
  const std::vector<std::uint64_t> table = degree_table(h, d);
  DegreeReport report;
  report.d = d;
  bool seen = false;
  for (std::uint64_t r = 0; r < table.size(); ++r) {
    if (shadow_only && table[r] == 0) continue;
    const VertexSet s = colex_unrank(r, d);
    if (!seen || table[r] < report.min_degree ||
        (table[r] == report.min_degree && lex_less(s, report.argmin_set))) {
      report.min_degree = table[r];
      report.argmin_set = s;
      seen = true;
    }
  }
  if (!seen) fail(ErrorCode::kInvalidArgument, "no shadow edges to take a minimum over");
  report.min_relative_degree =
      Rational(BigInt(report.min_degree), binomial(h.n() - d, h.k() - d));
  for (int j = 1; j <= d; ++j) report.shadow_densities.push_back(edge_density(shadow(h, j)));
  return report;
}

Rational edge_density(const Hypergraph& h) {
  const BigInt total = binomial(h.n(), h.k());
  if (total == 0) fail(ErrorCode::kInvalidArgument, "edge density undefined for n < k");
  return Rational(BigInt(h.edge_count()), total);
}

Hypergraph complement(const Hypergraph& h) {
  std::vector<VertexSet> out;
  for_each_subset_of(full_set(h.n()), h.k(), [&](VertexSet s) {
    if (!h.contains(s)) out.push_back(s);
  });
  return Hypergraph(h.n(), h.k(), std::move(out));
}

Hypergraph edge_union(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k())
    fail(ErrorCode::kInvalidArgument, "edge union of hypergraphs with different shapes");
  std::vector<VertexSet> out = a.edges();
  out.insert(out.end(), b.edges().begin(), b.edges().end());
  return Hypergraph(a.n(), a.k(), std::move(out));
}

Hypergraph edge_difference(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k())
    fail(ErrorCode::kInvalidArgument, "edge difference of hypergraphs with different shapes");
  std::vector<VertexSet> out;
  for (VertexSet e : a.edges())
    if (!b.contains(e)) out.push_back(e);
  return Hypergraph(a.n(), a.k(), std::move(out));
}

bool is_subgraph(const Hypergraph& sub, const Hypergraph& host) {
  if (sub.n() != host.n() || sub.k() != host.k()) return false;
  return std::all_of(sub.edges().begin(), sub.edges().end(),
                     [&](VertexSet e) { return host.contains(e); });
}

Hypergraph gen_complete(int n, int k) {
  if (k < 0 || k > n) fail(ErrorCode::kOutOfRange, "complete graph needs 0 <= k <= n");
  std::vector<VertexSet> out;
  for_each_subset_of(full_set(n), k, [&](VertexSet s) { out.push_back(s); });
  return Hypergraph(n, k, std::move(out));
}

Hypergraph gen_tight_cycle(int n, int k) {
  if (k < 1 || n <= k)
    fail(ErrorCode::kOutOfRange, "tight cycle needs n >= k + 1 (got n = " + std::to_string(n) +
                                     ", k = " + std::to_string(k) + ")");
  std::vector<VertexSet> out;
  for (int i = 0; i < n; ++i) {
    VertexSet e = 0;
    for (int j = 0; j < k; ++j) e |= singleton((i + j) % n);
    out.push_back(e);
  }
  return Hypergraph(n, k, std::move(out));
}

bool bernoulli(std::uint64_t u, const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  const BigInt lhs = BigInt(u) * denominator(p);
  const BigInt rhs = BigInt(numerator(p)) << 64;
  return lhs < rhs;
}

Hypergraph gen_random(int n, int k, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) fail(ErrorCode::kOutOfRange, "edge probability outside [0,1]");
  if (k < 0 || k > n) fail(ErrorCode::kOutOfRange, "random graph needs 0 <= k <= n");
  std::vector<VertexSet> out;
  for_each_subset_of(full_set(n), k, [&](VertexSet s) {
    if (bernoulli(counter_hash({seed, colex_rank(s)}), p)) out.push_back(s);
  });
  return Hypergraph(n, k, std::move(out));
}

}  // namespace tl
