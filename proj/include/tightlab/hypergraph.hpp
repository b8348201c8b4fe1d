#ifndef TIGHTLAB_HYPERGRAPH_HPP
#define TIGHTLAB_HYPERGRAPH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tightlab/rational.hpp"

namespace tl {

using Vertex = int;
/// A set of vertices of a hypergraph on at most 64 vertices, bit i = vertex i.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool has_vertex(VertexSet s, Vertex v) { return (s >> v) & 1U; }
inline VertexSet singleton(Vertex v) { return VertexSet{1} << v; }
inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Increasing list of the members of s.
std::vector<Vertex> members(VertexSet s);
VertexSet to_set(std::span<const Vertex> vertices);

/// Lexicographic order of the increasing tuples of two sets of equal size:
/// the set holding the least element of the symmetric difference comes first.
inline bool lex_less(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

/// Rank of s among all |s|-subsets of {0,1,...} in colexicographic order.
std::uint64_t colex_rank(VertexSet s);
/// Inverse of colex_rank for r-subsets.
VertexSet colex_unrank(std::uint64_t rank, int r);
/// C(n, r) for n <= 64 as a machine integer (saturates at UINT64_MAX).
std::uint64_t small_binomial(int n, int r);

/// All r-subsets of {0..n-1} in lexicographic order.
std::vector<VertexSet> subsets_lex(int n, int r);

/// Calls f(VertexSet) for every r-subset of `ground` (colex order of bit
/// positions).
template <class F>
void for_each_subset_of(VertexSet ground, int r, F&& f) {
  const std::vector<Vertex> items = members(ground);
  const int m = static_cast<int>(items.size());
  if (r < 0 || r > m) return;
  if (r == 0) {
    f(VertexSet{0});
    return;
  }
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= singleton(items[i]);
    f(s);
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Exact k-uniform hypergraph on vertices {0..n-1}. Edges are kept in
/// lexicographic order so equal hypergraphs compare and serialise identically.
/// Immutable once constructed.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Validates every edge (size k, inside the vertex range) and drops
  /// duplicates. Use build_hypergraph for tuple input with diagnostics.
  Hypergraph(int n, int k, std::vector<VertexSet> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<VertexSet>& edges() const& { return edges_; }
  std::vector<VertexSet> edges() && { return std::move(edges_); }
  bool contains(VertexSet e) const;
  /// Vertices lying in at least one edge.
  VertexSet support() const;
  /// Number of duplicate edges dropped at construction.
  std::size_t duplicates_dropped() const { return duplicates_; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int k_ = 0;
  std::size_t duplicates_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<VertexSet> by_value_;
  std::vector<std::uint64_t> dense_;  // colex-rank bitmap when C(n,k) is small
};

struct BuildResult {
  Hypergraph graph;
  std::size_t duplicate_count = 0;
};

/// Builds a hypergraph from vertex tuples in any order. Rejects out-of-range
/// vertices, wrong-size tuples and repeated vertices inside a tuple; repeated
/// edges are merged and counted.
BuildResult build_hypergraph(int n, int k, const std::vector<std::vector<int>>& edges);

/// j-th shadow: all j-sets contained in some edge, on the same vertex set.
Hypergraph shadow(const Hypergraph& h, int j);

/// Link (k-|S|)-graph {X \ S : S subset of X in E(h)} on the same vertex set.
Hypergraph link(const Hypergraph& h, VertexSet s);

std::uint64_t degree(const Hypergraph& h, VertexSet s);

/// deg(S) / C(n - |S|, k - |S|).
Rational relative_degree(const Hypergraph& h, VertexSet s);

/// Degree of every d-subset of {0..n-1}, indexed by colex rank.
std::vector<std::uint64_t> degree_table(const Hypergraph& h, int d);

struct DegreeReport {
  int d = 0;
  std::uint64_t min_degree = 0;
  Rational min_relative_degree;
  VertexSet argmin_set = 0;
  std::vector<Rational> shadow_densities;  // index j-1 holds the density of the j-th shadow
};

/// Minimum (relative) d-degree over all d-subsets of the vertex set, or over
/// the edges of the d-th shadow only when `shadow_only` is set. Ties resolve
/// to the lexicographically least set.
DegreeReport degree_stats(const Hypergraph& h, int d, bool shadow_only = false);

/// e(h) / C(n, k).
Rational edge_density(const Hypergraph& h);

Hypergraph complement(const Hypergraph& h);

Hypergraph edge_union(const Hypergraph& a, const Hypergraph& b);
Hypergraph edge_difference(const Hypergraph& a, const Hypergraph& b);
bool is_subgraph(const Hypergraph& sub, const Hypergraph& host);

Hypergraph gen_complete(int n, int k);
/// Edges {i, ..., i+k-1 mod n}; requires n >= k + 1.
Hypergraph gen_tight_cycle(int n, int k);
/// Each k-set joins independently with probability p. Membership depends only
/// on (seed, colex rank of the k-set).
Hypergraph gen_random(int n, int k, const Rational& p, std::uint64_t seed);

/// True when a 64-bit draw u lies below p * 2^64, i.e. an exact Bernoulli(p)
/// trial driven by a uniform 64-bit word.
bool bernoulli(std::uint64_t u, const Rational& p);

}  // namespace tl

#endif
