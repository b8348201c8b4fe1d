#include "tightlab/lp.hpp"

#include "tightlab/error.hpp"

namespace tl {

namespace {

class Tableau {
 public:
  // Columns: structural, then one slack or surplus per inequality row, then
  // one artificial per row that is >= or = after making every rhs >= 0.
  explicit Tableau(const LinearProgram& lp) : m_(lp.rows.size()), n_struct_(lp.num_vars) {
    std::vector<RowSense> sense(m_);
    int slack = 0, artificial = 0;
    flip_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      sense[i] = lp.rows[i].sense;
      if (lp.rows[i].rhs < 0) {
        flip_[i] = -1;
        if (sense[i] == RowSense::kLessEqual) sense[i] = RowSense::kGreaterEqual;
        else if (sense[i] == RowSense::kGreaterEqual) sense[i] = RowSense::kLessEqual;
      }
      if (sense[i] != RowSense::kEqual) ++slack;
      if (sense[i] != RowSense::kLessEqual) ++artificial;
    }
    first_artificial_ = n_struct_ + slack;
    cols_ = first_artificial_ + artificial;
    a_.assign(m_, std::vector<Rational>(cols_));
    rhs_.resize(m_);
    basis_.resize(m_);
    identity_col_.resize(m_);
    int next_slack = n_struct_, next_art = first_artificial_;
    for (std::size_t i = 0; i < m_; ++i) {
      const LpRow& r = lp.rows[i];
      for (const auto& [var, c] : r.coeffs) {
        if (var < 0 || var >= n_struct_) fail(ErrorCode::kInvalidArgument, "LP row references an unknown variable");
        a_[i][var] += flip_[i] * c;
      }
      rhs_[i] = flip_[i] * r.rhs;
      if (sense[i] == RowSense::kLessEqual) {
        a_[i][next_slack] = 1;
        basis_[i] = identity_col_[i] = next_slack++;
        continue;
      }
      if (sense[i] == RowSense::kGreaterEqual) a_[i][next_slack++] = -1;
      a_[i][next_art] = 1;
      basis_[i] = identity_col_[i] = next_art++;
    }
  }

  LpSolution solve(const LinearProgram& lp) {
    LpSolution out;
    // Phase 1: maximise -(sum of artificials).
    std::vector<Rational> cost(cols_);
    bool need_phase1 = false;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= first_artificial_) need_phase1 = true;
    if (need_phase1) {
      for (int c = first_artificial_; c < cols_; ++c) cost[c] = -1;
      run(cost, /*allow_artificial=*/true, out.pivots);
      Rational infeas = 0;
      for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] >= first_artificial_) infeas += rhs_[i];
      if (infeas != 0) {
        out.status = LpStatus::kInfeasible;
        return out;
      }
      // Drive zero-valued artificials out of the basis where possible.
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] < first_artificial_) continue;
        for (int c = 0; c < first_artificial_; ++c)
          if (a_[i][c] != 0) {
            pivot(i, c);
            ++out.pivots;
            break;
          }
      }
    }
    std::fill(cost.begin(), cost.end(), Rational(0));
    for (int j = 0; j < n_struct_ && j < static_cast<int>(lp.objective.size()); ++j) cost[j] = lp.objective[j];
    if (!run(cost, /*allow_artificial=*/false, out.pivots)) {
      out.status = LpStatus::kUnbounded;
      return out;
    }
    out.status = LpStatus::kOptimal;
    out.x.assign(n_struct_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_struct_) out.x[basis_[i]] = rhs_[i];
    out.value = 0;
    for (int j = 0; j < n_struct_; ++j) out.value += cost[j] * out.x[j];
    // y = c_B B^{-1}; column identity_col_[i] of the tableau is B^{-1} e_i.
    out.duals.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational y = 0;
      for (std::size_t r = 0; r < m_; ++r) {
        const Rational& t = a_[r][identity_col_[i]];
        if (t != 0) y += cost[basis_[r]] * t;
      }
      out.duals[i] = flip_[i] * y;
    }
    return out;
  }

 private:
  void pivot(std::size_t row, int col) {
    const Rational p = a_[row][col];
    for (int c = 0; c < cols_; ++c)
      if (a_[row][c] != 0) a_[row][c] /= p;
    rhs_[row] /= p;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row) continue;
      const Rational f = a_[r][col];
      if (f == 0) continue;
      for (int c = 0; c < cols_; ++c)
        if (a_[row][c] != 0) a_[r][c] -= f * a_[row][c];
      rhs_[r] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  // Maximises cost . x from the current basis. False when unbounded.
  bool run(const std::vector<Rational>& cost, bool allow_artificial, std::size_t& pivots) {
    const int limit = allow_artificial ? cols_ : first_artificial_;
    std::vector<bool> in_basis(cols_, false);
    while (true) {
      std::fill(in_basis.begin(), in_basis.end(), false);
      for (int b : basis_) in_basis[b] = true;
      // Bland: least column with positive reduced gain c_j - c_B B^{-1} A_j.
      int enter = -1;
      for (int c = 0; c < limit && enter < 0; ++c) {
        if (in_basis[c]) continue;
        Rational gain = cost[c];
        for (std::size_t r = 0; r < m_; ++r)
          if (a_[r][c] != 0 && cost[basis_[r]] != 0) gain -= cost[basis_[r]] * a_[r][c];
        if (gain > 0) enter = c;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (a_[r][enter] <= 0) continue;
        const Rational q = rhs_[r] / a_[r][enter];
        if (leave < 0 || q < best || (q == best && basis_[r] < basis_[leave])) {
          leave = static_cast<int>(r);
          best = q;
        }
      }
      if (leave < 0) return false;
      pivot(static_cast<std::size_t>(leave), enter);
      ++pivots;
    }
  }

  std::size_t m_;
  int n_struct_;
  int first_artificial_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<int> identity_col_;
  std::vector<int> flip_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  if (lp.num_vars < 0) fail(ErrorCode::kInvalidArgument, "negative variable count");
  Tableau t(lp);
  return t.solve(lp);
}

}  // namespace tl
