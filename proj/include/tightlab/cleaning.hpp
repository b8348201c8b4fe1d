#ifndef TIGHTLAB_CLEANING_HPP
#define TIGHTLAB_CLEANING_HPP

#include <string>
#include <vector>

#include "tightlab/hypergraph.hpp"

namespace tl {

/// Levels I_1..I_k of a k-graph I. I_k = I and I_j keeps the j-sets of
/// the shadow of I_{j+1} whose degree in I_{j+1}, divided by t - j, reaches
/// the threshold. With root = r the comparison is (deg / (t - j))^r >= beta,
/// which is the beta^{1/r} threshold in exact arithmetic.
struct Gradation {
  std::vector<Hypergraph> levels;  // levels[j - 1] is I_j
  Rational beta;
  int root = 1;

  const Hypergraph& level(int j) const { return levels.at(static_cast<std::size_t>(j - 1)); }
};

Gradation gradation(const Hypergraph& i, const Rational& beta, int root = 1);

/// If e(I) <= beta^k C(t, k) then e(I_j) <= beta^j C(t, j) for every j.
/// Empty string when the implication holds; otherwise the offending level.
std::string check_gradation_sizes(const Gradation& g);

/// For 1 <= i <= j <= k - 1, an i-set outside I_i has degree at most
/// (j - i) beta t^{j - i} in I_j. Empty string when every case holds.
std::string check_gradation_degrees(const Gradation& g);

/// Edges of r containing an edge of I_j for some 1 <= j <= d, where the I_j
/// come from gradation(i, beta).
Hypergraph degree_perturbation(const Hypergraph& r, const Hypergraph& i, int d, const Rational& beta);

struct CleaningResult {
  Hypergraph r_clean;  // R - I - F
  Hypergraph f;
  Rational beta;
  Gradation gradation_of_i;
  Gradation gradation_of_f;  // threshold beta^{1/k}
  /// Minimum relative degree in r_clean over every j-set Y not in C_j,
  /// 1 <= j <= d. Zero when some such Y is isolated in r_clean.
  Rational delta_out;
  /// Largest density of the complement of a j-th shadow of r_clean.
  Rational max_complement_density;
  /// Largest share of extensions of a (j-1)-shadow edge landing outside the
  /// j-th shadow.
  Rational max_complement_ratio;
  /// The sum of the two maxima above, or 1 / C(t, k) when both vanish; with
  /// delta_out these pass verify_perturbed_degree.
  Rational alpha_star;
  /// Whether conversely every Y outside C_j already lies in the j-th shadow.
  bool shadow_covers_complement = false;
  std::size_t sets_checked = 0;
};

/// R' = R - I - F with F = degree_perturbation(r, i, d, beta). Before
/// returning it checks that no j-set of the j-th shadow of R' lies in C_j;
/// a violation throws Error(kCertificateViolation) naming the set.
CleaningResult clean(const Hypergraph& r, const Hypergraph& i, int d, const Rational& beta);

}  // namespace tl

#endif
