#ifndef TIGHTLAB_VICINITY_HPP
#define TIGHTLAB_VICINITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tightlab/hypergraph.hpp"
#include "tightlab/io.hpp"
#include "tightlab/matching.hpp"
#include "tightlab/tight.hpp"

namespace tl {

/// d-vicinity of a k-graph R: one (k-d)-graph C_S inside the link of every
/// S in the d-th shadow of R. Entries are sorted by S in lexicographic order.
struct Vicinity {
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<VertexSet> keys;
  std::vector<Hypergraph> members;

  /// Member for S, or nullptr when S is not a key.
  const Hypergraph* find(VertexSet s) const;
};

/// Key set must equal the d-th shadow of R and every C_S must lie in L_R(S).
/// Empty string when valid.
std::string check_vicinity(const Hypergraph& r, const Vicinity& v);

/// The k-graph whose edges are A + S over all S and all A in C_S.
Hypergraph generate_graph(const Vicinity& v);

enum class SelectionStrategy { kMaxRatio, kMaxEdges };

struct SelectionRecord {
  VertexSet s = 0;
  std::size_t components = 0;
  int chosen = -1;
  // e_l and e_{l-1} of the chosen component and of the whole link.
  std::size_t chosen_edges = 0, chosen_shadow = 0, link_edges = 0, link_shadow = 0;
};

struct Selection {
  Vicinity vicinity;
  std::vector<SelectionRecord> records;  // parallel to vicinity.keys
};

/// For every S picks a tight component of L_R(S): the largest
/// e_l(C) / e_{l-1}(C) (compared exactly) or the most edges; ties go to the
/// component with the least edge. Max-ratio picks are checked against
/// e_l(C) e_{l-1}(L) >= e_l(L) e_{l-1}(C).
Selection select_vicinity(const Hypergraph& r, int d, SelectionStrategy strategy);

/// True iff the max-ratio inequality holds for a record.
bool ratio_certificate_holds(const SelectionRecord& rec);

/// Least c (not in A) with (A + c) - a and (A + c) - b both edges, or -1.
Vertex switcher_witness(const Hypergraph& c, VertexSet a_edge, Vertex central, Vertex b);

/// Visits edges by increasing f(A) = sum over a in A of n / deg(A - a)
/// (exact; ties by lexicographic order) and central vertices in increasing
/// order; returns the first switcher. std::nullopt means no edge and central
/// vertex pair works. For l = 1 every edge is a switcher.
std::optional<Switcher> find_switcher(const Hypergraph& c);

/// (v1..v_{k+1}) with S = {v1..vd}, {v_{d+1}..vk} in C_S, S' = {v2..v_{d+1}}
/// and {v_{d+2}..v_{k+1}} in C_{S'}; all entries distinct.
struct Arc {
  std::vector<Vertex> tuple;
};

std::string check_arc(const Vicinity& v, const Arc& arc);

struct ArcSearch {
  std::optional<Arc> arc;
  bool greedy = false;   // found before the exhaustive pass
  std::size_t candidates = 0;
};

/// Greedy pass (v_{d+1} of maximum degree in C_S) followed by an exhaustive
/// pass over all S, v1, A in C_S, v_{d+1} in A and v_{k+1}.
ArcSearch find_arc(const Vicinity& v);

enum class CheckStatus { kPass, kFail, kSkipped };

struct PropertyCheck {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
  Json witness;  // counterexample on failure, checked bound on pass
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool passed() const;
  const PropertyCheck& get(const std::string& name) const;
};

Json report_to_json(const PropertyReport& r);

struct VicinityOptions {
  bool adjacent_pairs_only = false;  // V2 only for |S & S'| = d - 1
};

/// V1 each C_S tightly connected; V2 pairwise common edges; V3 switchers and
/// an arc; V4 a fractional matching of density 1/k + gamma in each C_S (over
/// n vertices); V5 e(C_S) / C(n-d, k-d) >= 1 - delta + gamma.
PropertyReport verify_hamilton_vicinity(const Hypergraph& r, const Vicinity& v, const Rational& gamma,
                                        const Rational& delta, const VicinityOptions& options = {});

struct FrameworkOptions {
  RobustOptions robust;
};

/// F1 non-isolated vertices >= (1 - alpha) n; F2 one tight component; F3
/// closed walk of length 1 mod k; F4 robust matchability of H on its support;
/// F5 minimum relative vertex degree of H on its support >= 1 - delta + gamma.
PropertyReport verify_framework(const Hypergraph& r, const Hypergraph& h, const Rational& alpha,
                                const Rational& gamma, const Rational& delta,
                                const FrameworkOptions& options = {});

/// P1-P3 for every 1 <= j <= d. P3 uses the convention that the 0-th shadow
/// of a nonempty graph is {empty set}.
PropertyReport verify_perturbed_degree(const Hypergraph& r, int d, const Rational& alpha,
                                       const Rational& delta);

/// Restriction to the vertices lying in edges, relabelled 0..m-1 in order.
Hypergraph restrict_to_support(const Hypergraph& h);

Json vicinity_to_json(const Vicinity& v);
Vicinity vicinity_from_json(const Json& j, int n, int k);

}  // namespace tl

#endif
