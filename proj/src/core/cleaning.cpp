#include "tightlab/cleaning.hpp"

#include <map>

#include "tightlab/error.hpp"

namespace tl {
namespace {

// Degree of every (k-1)-set of the shadow of h, keyed by the set.
std::map<VertexSet, std::uint64_t> down_degrees(const Hypergraph& h) {
  std::map<VertexSet, std::uint64_t> deg;
  for (VertexSet e : h.edges())
    for (Vertex v : members(e)) ++deg[e & ~singleton(v)];
  return deg;
}

// Degree into h of every i-set contained in an edge of h.
std::map<VertexSet, std::uint64_t> subset_degrees(const Hypergraph& h, int i) {
  std::map<VertexSet, std::uint64_t> deg;
  for (VertexSet e : h.edges()) for_each_subset_of(e, i, [&](VertexSet s) { ++deg[s]; });
  return deg;
}

bool reaches(const Rational& r, int root, const Rational& beta) {
  Rational p = 1;
  for (int i = 0; i < root; ++i) p *= r;
  return p >= beta;
}

void require_same_shape(const Hypergraph& r, const Hypergraph& i) {
  if (r.n() != i.n() || r.k() != i.k())
    fail(ErrorCode::kInvalidArgument, "R and I must share n and k");
}

void require_beta(const Rational& beta) {
  if (beta <= 0 || beta > 1) fail(ErrorCode::kInvalidArgument, "beta must lie in (0, 1]");
}

Rational power(const Rational& x, int e) {
  Rational p = 1;
  for (int i = 0; i < e; ++i) p *= x;
  return p;
}

}  // namespace

Gradation gradation(const Hypergraph& i, const Rational& beta, int root) {
  require_beta(beta);
  if (root < 1) fail(ErrorCode::kInvalidArgument, "gradation root must be positive");
  const int t = i.n(), k = i.k();
  Gradation g;
  g.beta = beta;
  g.root = root;
  g.levels.resize(static_cast<std::size_t>(k));
  g.levels[k - 1] = i;
  for (int j = k - 1; j >= 1; --j) {
    std::vector<VertexSet> kept;
    for (const auto& [s, deg] : down_degrees(g.levels[j])) {
      const Rational rel(static_cast<long long>(deg), static_cast<long long>(t - j));
      if (reaches(rel, root, beta)) kept.push_back(s);
    }
    g.levels[j - 1] = Hypergraph(t, j, std::move(kept));
  }
  return g;
}

std::string check_gradation_sizes(const Gradation& g) {
  if (g.root != 1) fail(ErrorCode::kInvalidArgument, "size bound applies to root 1 gradations");
  const int k = static_cast<int>(g.levels.size());
  if (edge_density(g.level(k)) > power(g.beta, k)) return {};
  for (int j = 1; j < k; ++j) {
    const Rational dens = edge_density(g.level(j));
    if (dens > power(g.beta, j))
      return "level " + std::to_string(j) + " has density " + to_string(dens);
  }
  return {};
}

std::string check_gradation_degrees(const Gradation& g) {
  if (g.root != 1) fail(ErrorCode::kInvalidArgument, "degree bound applies to root 1 gradations");
  const int k = static_cast<int>(g.levels.size());
  const int t = k == 0 ? 0 : g.level(k).n();
  for (int j = 1; j <= k - 1; ++j) {
    for (int i = 1; i <= j; ++i) {
      const Rational bound = Rational(j - i) * g.beta * power(Rational(t), j - i);
      for (const auto& [s, deg] : subset_degrees(g.level(j), i)) {
        if (g.level(i).contains(s)) continue;
        if (Rational(static_cast<long long>(deg)) > bound) {
          std::string set;
          for (Vertex v : members(s)) set += (set.empty() ? "" : ",") + std::to_string(v);
          return "set {" + set + "} has degree " + std::to_string(deg) + " in level " +
                 std::to_string(j) + " above " + to_string(bound);
        }
      }
    }
  }
  return {};
}

namespace {

Hypergraph perturbation_from(const Hypergraph& r, const Gradation& g, int d) {
  std::vector<VertexSet> kept;
  for (VertexSet e : r.edges()) {
    bool hit = false;
    for (int j = 1; j <= d && !hit; ++j) {
      const Hypergraph& level = g.level(j);
      if (level.empty()) continue;
      for_each_subset_of(e, j, [&](VertexSet s) { hit = hit || level.contains(s); });
    }
    if (hit) kept.push_back(e);
  }
  return Hypergraph(r.n(), r.k(), std::move(kept));
}

}  // namespace

Hypergraph degree_perturbation(const Hypergraph& r, const Hypergraph& i, int d, const Rational& beta) {
  require_same_shape(r, i);
  if (d < 1 || d > r.k() - 1) fail(ErrorCode::kInvalidArgument, "perturbation needs 1 <= d <= k-1");
  return perturbation_from(r, gradation(i, beta), d);
}

CleaningResult clean(const Hypergraph& r, const Hypergraph& i, int d, const Rational& beta) {
  require_same_shape(r, i);
  const int n = r.n(), k = r.k();
  if (d < 1 || d > k - 1) fail(ErrorCode::kInvalidArgument, "cleaning needs 1 <= d <= k-1");
  CleaningResult out;
  out.beta = beta;
  out.gradation_of_i = gradation(i, beta);
  out.f = perturbation_from(r, out.gradation_of_i, d);
  out.r_clean = edge_difference(edge_difference(r, i), out.f);
  out.gradation_of_f = gradation(out.f, beta, k);

  const Hypergraph& rc = out.r_clean;
  bool have_min = false;
  out.delta_out = 1;
  out.shadow_covers_complement = true;
  out.max_complement_density = 0;
  out.max_complement_ratio = 0;
  for (int j = 1; j <= d; ++j) {
    const Hypergraph& cj = out.gradation_of_f.level(j);
    const std::vector<std::uint64_t> deg = degree_table(rc, j);
    const BigInt ext = binomial(n - j, k - j);
    std::uint64_t missing = 0;
    for (std::uint64_t rank = 0; rank < deg.size(); ++rank) {
      const VertexSet y = colex_unrank(rank, j);
      ++out.sets_checked;
      if (deg[rank] == 0) ++missing;
      if (cj.contains(y)) {
        if (deg[rank] > 0) {
          std::string set;
          for (Vertex v : members(y)) set += (set.empty() ? "" : ",") + std::to_string(v);
          fail(ErrorCode::kCertificateViolation,
               "cleaning certificate violated: {" + set + "} lies in the shadow of R' and in C_" +
                   std::to_string(j));
        }
        continue;
      }
      if (deg[rank] == 0) out.shadow_covers_complement = false;
      const Rational rel(BigInt(deg[rank]), ext);
      if (!have_min || rel < out.delta_out) {
        out.delta_out = rel;
        have_min = true;
      }
    }
    const Rational dens(BigInt(missing), binomial(n, j));
    if (dens > out.max_complement_density) out.max_complement_density = dens;
    std::vector<VertexSet> lower;
    if (j == 1) {
      if (!rc.empty()) lower.push_back(0);
    } else {
      lower = shadow(rc, j - 1).edges();
    }
    for (VertexSet z : lower) {
      std::uint64_t outside = 0;
      for (Vertex x = 0; x < n; ++x)
        if (!has_vertex(z, x) && deg[colex_rank(z | singleton(x))] == 0) ++outside;
      const Rational rel(static_cast<long long>(outside), static_cast<long long>(n - j + 1));
      if (rel > out.max_complement_ratio) out.max_complement_ratio = rel;
    }
  }
  out.alpha_star = out.max_complement_density + out.max_complement_ratio;
  if (out.alpha_star == 0) out.alpha_star = Rational(BigInt(1), binomial(n, k));
  return out;
}

}  // namespace tl
