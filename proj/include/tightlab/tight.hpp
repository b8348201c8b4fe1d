#ifndef TIGHTLAB_TIGHT_HPP
#define TIGHTLAB_TIGHT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightlab/hypergraph.hpp"

namespace tl {

/// Vertex sequence whose every k-window (cyclically, if closed) is an edge of
/// the host it was validated against. Length is the number of vertices.
struct TightWalk {
  std::vector<Vertex> vertices;
  bool closed = false;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const TightWalk&, const TightWalk&) = default;
};

/// Ordered k-tuple whose underlying set is an edge.
using DirectedEdge = std::vector<Vertex>;

struct WalkDiagnostic {
  bool ok = true;
  std::size_t failing_window = 0;  // start index of the first bad window
  std::string reason;
};

/// Checks every window without throwing. Closed walks need at least k + 1
/// vertices (a single vertex suffices when k = 1).
WalkDiagnostic check_walk(const Hypergraph& h, const std::vector<Vertex>& seq, bool closed);

/// check_walk, throwing Error(kInvalidArgument) with the diagnostic on failure.
TightWalk validate_walk(const Hypergraph& h, std::vector<Vertex> seq, bool closed);

struct ComponentSummary {
  std::size_t edge_count = 0;
  std::size_t shadow_edge_count = 0;  // e_{k-1}; the empty set counts once when k = 1
  VertexSet span = 0;
  Rational edge_density;
  Rational shadow_density;
};

/// Tight components, numbered 0..c-1 in order of their lexicographically least
/// edge. `component_of` is parallel to Hypergraph::edges().
struct ComponentPartition {
  std::vector<int> component_of;
  std::vector<ComponentSummary> summaries;

  std::size_t count() const { return summaries.size(); }
  Hypergraph component(const Hypergraph& h, int id) const;
};

/// Union-find over pairs of edges sharing exactly k - 1 vertices. Consecutive
/// windows of a tight walk overlap in k - 1 vertices, and a chain of such
/// overlaps is traced by one walk that rotates inside each edge, so this
/// relation generates exactly the co-walk relation.
ComponentPartition tight_components(const Hypergraph& h);

/// Walk-state search: is there a tight walk that contains e and later f?
/// Independent of tight_components; kept as its test oracle.
bool co_walk_oracle(const Hypergraph& h, VertexSet e, VertexSet f);

inline constexpr std::size_t kDefaultDirectedEdgeGuard = std::size_t{1} << 21;

/// True iff the digraph on directed edges with arcs (v1..vk) -> (v2..vk+1) is
/// strongly connected. Refuses inputs with more than `guard` directed edges.
bool is_strongly_connected(const Hypergraph& h,
                           std::size_t guard = kDefaultDirectedEdgeGuard);

/// Shortest (then lexicographically least) tight walk starting with `from` and
/// ending with `to`; with a residue, its length must be congruent to it mod k.
/// std::nullopt means the whole state space was exhausted.
std::optional<TightWalk> find_tight_walk(const Hypergraph& h, const DirectedEdge& from,
                                         const DirectedEdge& to,
                                         std::optional<int> residue = std::nullopt);

struct StrongComponentInfo {
  DirectedEdge representative;  // least directed edge of the component
  std::size_t size = 0;
  bool has_cycle = false;
  std::size_t period = 0;  // gcd of closed-walk lengths; 0 without a cycle
};

struct ClosedWalkSearch {
  std::optional<TightWalk> walk;
  /// Every strong component of the directed-edge digraph with its period.
  /// A closed walk of length r mod k exists iff some component with a cycle
  /// has gcd(period, k) dividing r, so on failure this list is the
  /// certificate.
  std::vector<StrongComponentInfo> components;
};

/// Shortest closed tight walk of length congruent to `residue` mod k through
/// the first strong component that admits one.
ClosedWalkSearch find_closed_walk(const Hypergraph& h, int residue,
                                  std::size_t guard = kDefaultDirectedEdgeGuard);

/// Edge A with a central vertex a such that for every b in A some c outside A
/// makes (A + c) - a and (A + c) - b both edges.
struct Switcher {
  VertexSet edge = 0;
  Vertex central = 0;
  std::vector<std::pair<Vertex, Vertex>> witnesses;  // (b, c) for every b in A, ascending b

  friend bool operator==(const Switcher&, const Switcher&) = default;
};

/// Re-checks every witness of `sw` against c; empty string when valid.
std::string check_switcher(const Hypergraph& c, const Switcher& sw);

/// Closed tight walk of length l^2 - 1 built from a switcher of an l-graph by
/// concatenating A_0 = (a1..al), A_1 = (b2, a1, a3..al),
/// A_i = (a2..ai, b_{i+1}, a1, a_{i+2}..al) and A_{l-1} = (a2..a_{l-1}, b_l).
/// For l = 2 this is the witness triangle; for l = 1 the single edge.
TightWalk switcher_loop(const Hypergraph& c, const Switcher& sw);

struct ShortenResult {
  TightWalk walk;
  /// [begin, end) vertex ranges removed, in the coordinates of the walk at the
  /// time of each removal. Every range has length divisible by k.
  std::vector<std::pair<std::size_t, std::size_t>> excisions;
};

/// Repeatedly removes the segment between two occurrences of the same ordered
/// k-tuple whose positions differ by a multiple of k. Keeps the first and the
/// last window and the length mod k; afterwards no k-tuple occurs more than k
/// times, so the length is at most k times the number of ordered k-tuples.
ShortenResult shorten_walk_mod_k(const Hypergraph& h, const TightWalk& w);

}  // namespace tl

#endif
