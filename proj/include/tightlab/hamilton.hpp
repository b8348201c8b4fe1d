#ifndef TIGHTLAB_HAMILTON_HPP
#define TIGHTLAB_HAMILTON_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tightlab/tight.hpp"

namespace tl {

enum class SearchOutcome { kFound, kExhausted, kTimeout };

/// "found", "exhausted-none" or "timeout".
const char* outcome_name(SearchOutcome o);

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 60.0;
};

struct HamiltonResult {
  SearchOutcome outcome = SearchOutcome::kExhausted;
  std::optional<TightWalk> cycle;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Backtracking over vertex sequences that start at vertex 0 and whose second
/// vertex is below the last one, so each cycle is met once. Partial sequences
/// are cut as soon as a window is not an edge or the last k - 1 vertices have
/// no extension by an unused vertex. Requires n >= k + 1.
HamiltonResult find_tight_hamilton(const Hypergraph& h, const SearchBudget& budget = {});

/// Tight cycle on exactly `length` distinct vertices, k + 1 <= length <= n.
/// The first vertex is the least one on the cycle.
HamiltonResult find_tight_cycle(const Hypergraph& h, int length, const SearchBudget& budget = {});

/// Tight paths A, B, C on k vertices each with AC and ABC tight, and for every
/// i paths P_i, Q_i on k - 1 vertices with P_i b_i Q_i and P_i t_i Q_i tight.
/// All parts are pairwise disjoint and avoid the target T.
struct AbsorbingGadget {
  std::vector<Vertex> target;  // t_1..t_k
  std::vector<Vertex> a, b, c;
  std::vector<std::vector<Vertex>> p, q;

  VertexSet span() const;
};

/// Empty string when every invariant holds in g.
std::string check_gadget(const Hypergraph& g, const AbsorbingGadget& gadget);

struct GadgetOptions {
  std::uint64_t seed = 0;
  int restarts = 16;
  std::uint64_t nodes_per_restart = 200'000;
  SearchBudget budget;  // for the final complete search
};

struct GadgetSearch {
  SearchOutcome outcome = SearchOutcome::kExhausted;
  std::optional<AbsorbingGadget> gadget;
  std::uint64_t nodes = 0;
  int restarts_used = 0;
};

/// Randomised restarts of a slot-by-slot backtracking (A, B, C, then each
/// P_i, Q_i), followed by one complete search in ascending vertex order. Only
/// the complete search can report exhausted-none.
GadgetSearch find_absorbing_gadget(const Hypergraph& g, const std::vector<Vertex>& target,
                                   const GadgetOptions& options = {});

/// The path A C P_1 b_1 Q_1 ... P_k b_k Q_k. It is a tight path whenever the
/// host contains the windows across the joints, e.g. in a complete graph.
std::vector<Vertex> gadget_path(const AbsorbingGadget& gadget);

struct SwapReport {
  bool ok = false;
  std::string reason;
  std::vector<Vertex> swapped;  // P' when ok
};

/// Replaces AC by ABC and every P_i b_i Q_i by P_i t_i Q_i in the path p and
/// checks that the result is a tight path with the same end (k-1)-tuples and
/// vertex set V(P) + T.
SwapReport verify_absorption_swap(const Hypergraph& g, const std::vector<Vertex>& path,
                                  const AbsorbingGadget& gadget);

}  // namespace tl

#endif
