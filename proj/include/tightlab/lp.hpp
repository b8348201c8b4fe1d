#ifndef TIGHTLAB_LP_HPP
#define TIGHTLAB_LP_HPP

#include <utility>
#include <vector>

#include "tightlab/rational.hpp"

namespace tl {

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

struct LpRow {
  std::vector<std::pair<int, Rational>> coeffs;  // (variable, coefficient)
  RowSense sense = RowSense::kLessEqual;
  Rational rhs;
};

/// maximise objective . x subject to the rows and x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
  /// One multiplier per row of the original program: >= 0 on <= rows,
  /// <= 0 on >= rows, free on = rows. Filled only when optimal.
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

/// Dense two-phase simplex in exact arithmetic with Bland's rule.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace tl

#endif
