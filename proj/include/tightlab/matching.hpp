#ifndef TIGHTLAB_MATCHING_HPP
#define TIGHTLAB_MATCHING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tightlab/hypergraph.hpp"

namespace tl {

/// Vertex weighting b: one rational in [0, 1] per vertex.
using VertexWeighting = std::vector<Rational>;

VertexWeighting uniform_weighting(int n, const Rational& value = Rational(1));

/// Optimal b-fractional matching (weights parallel to H.edges()) together with
/// an optimal fractional vertex cover. value = sum of weights = cover . b.
struct FractionalMatching {
  Rational value;
  std::vector<Rational> weights;
  std::vector<Rational> cover;
};

FractionalMatching lp_matching(const Hypergraph& h, const VertexWeighting& b);

/// Independent recheck of a matching/cover pair: feasibility of both, equal
/// objectives and complementary slackness. Empty string when all hold.
std::string check_matching_certificate(const Hypergraph& h, const VertexWeighting& b,
                                       const FractionalMatching& m);

/// Sum of weights divided by the number of vertices.
Rational matching_density(const FractionalMatching& m, int n);

inline constexpr std::size_t kDefaultMatchingEdgeGuard = 5000;

struct IntegralMatching {
  std::vector<VertexSet> edges;
  std::size_t nodes = 0;
  std::size_t size() const { return edges.size(); }
};

/// Maximum matching by branch and bound; the bound is the better of a vertex
/// count and the fractional matching number of the remaining graph.
IntegralMatching max_matching_exact(const Hypergraph& h,
                                    std::size_t edge_guard = kDefaultMatchingEdgeGuard);

/// Nonnegative w with per-vertex load exactly b, if one exists.
std::optional<std::vector<Rational>> perfect_b_matching(const Hypergraph& h,
                                                        const VertexWeighting& b);

struct RobustOptions {
  int corner_guard = 16;
  bool allow_sampling = false;
  std::uint64_t seed = 1;
  std::size_t samples = 256;
};

struct RobustReport {
  bool robust = false;
  /// False when the answer comes from sampling rather than every corner.
  bool certified = false;
  std::size_t corners_checked = 0;
  std::optional<VertexWeighting> failing_weighting;
  std::string mode;  // "corners" or "sampled, not certified"
};

/// Checks every b in {1 - gamma, 1}^V for an exact perfect b-matching. Loads
/// of nonnegative edge weightings form a convex cone, so feasibility at the
/// corners of the box gives feasibility everywhere inside it.
RobustReport is_robustly_matchable(const Hypergraph& h, const Rational& gamma,
                                   const RobustOptions& options = {});

struct LiftingLevel {
  int level = 0;           // size of the sets whose links are examined
  std::size_t sets = 0;    // number of such sets
  bool links_matched = true;   // every link has nu >= m
  bool size_condition = true;  // m <= |b restricted to the link's vertices| / (k - level)
  std::optional<VertexSet> witness;  // first set breaking either condition
};

struct LiftingReport {
  int d = 1;
  Rational m;
  bool hypothesis = false;
  bool conclusion = false;
  Rational nu;
  /// One entry per level d, d-1, ..., 0. The hypothesis is the top level's
  /// link condition plus the size condition on every lower level.
  std::vector<LiftingLevel> levels;
  bool violated() const { return hypothesis && !conclusion; }
};

/// d = 1: every vertex link has a b-fractional matching of size m, and
/// m <= |b| / k. d > 1: every d-set of the shadow qualifies, and each lower
/// level satisfies the size condition needed to lift one level down. The
/// conclusion is nu(H, b) >= m.
LiftingReport verify_matching_lifting(const Hypergraph& h, int d, const Rational& m,
                                      const VertexWeighting& b);

struct BoundReport {
  bool hypothesis = false;
  bool conclusion = false;
  std::size_t matching = 0;   // exact maximum matching (computed when relevant)
  std::string detail;
  bool violated() const { return hypothesis && !conclusion; }
};

/// e(C) >= (s - 1) e_{l-1}(C) + 1 implies a matching with s edges.
BoundReport check_frankl_bound(const Hypergraph& c, int s);

/// e(G) > max{C(2s-1, 2), C(n, 2) - C(n-s+1, 2)} implies a matching with s edges.
BoundReport check_erdos_gallai(const Hypergraph& g, int s);

struct KruskalKatonaReport {
  int j = 0;
  std::uint64_t edges = 0;
  std::uint64_t shadow_edges = 0;
  Rational x;      // lower end of the bisection bracket for C(x, k) = e
  Rational bound;  // C(x, j)
  bool holds = false;
  double density_form = 0;  // delta^{j/k} with delta = e / C(n, k)
  Rational shadow_density;
};

/// Lovasz form: with e(H) = C(x, k), x >= k - 1, the j-shadow has at least
/// C(x, j) edges. x is bracketed by bisection to 2^-40 and the comparison
/// allows a slack of 1e-9.
KruskalKatonaReport check_kruskal_katona(const Hypergraph& h, int j);

}  // namespace tl

#endif
