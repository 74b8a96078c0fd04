#pragma once

#include <optional>
#include <vector>

#include "toriclg/numeric.hpp"

/// Exact rational linear programming (two-phase simplex, Bland's rule).
/// Problem sizes in this library are tiny, so a dense tableau is enough.
namespace toriclg::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Problem {
  std::size_t num_vars = 0;                 // variables are free (unrestricted sign)
  std::vector<std::vector<Rational>> le;    // le[i] . x <= le_rhs[i]
  std::vector<Rational> le_rhs;
  std::vector<std::vector<Rational>> eq;    // eq[i] . x == eq_rhs[i]
  std::vector<Rational> eq_rhs;
  std::vector<Rational> objective;          // maximize objective . x

  explicit Problem(std::size_t n = 0) : num_vars(n), objective(n, 0) {}

  template <class Row>
  void add_le(const Row& row, const Rational& rhs) {
    le.emplace_back(row.begin(), row.end());
    le_rhs.push_back(rhs);
  }
  template <class Row>
  void add_ge(const Row& row, const Rational& rhs) {
    std::vector<Rational> neg;
    for (const auto& v : row) neg.push_back(-Rational(v));
    le.push_back(std::move(neg));
    le_rhs.push_back(-rhs);
  }
  template <class Row>
  void add_eq(const Row& row, const Rational& rhs) {
    eq.emplace_back(row.begin(), row.end());
    eq_rhs.push_back(rhs);
  }
};

struct Result {
  Status status = Status::Infeasible;
  Rational value = 0;
  std::vector<Rational> x;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, std::vector<Rational>(cols + 1, 0)), basis_(rows, 0) {}

  std::vector<std::vector<Rational>>& rows() { return t_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t cols() const { return t_.empty() ? 0 : t_.front().size() - 1; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_[r][c];
    for (auto& v : t_[r]) v *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j < t_[i].size(); ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  /// Maximizes cost . y over the current feasible basis. `allowed` masks entering columns.
  /// Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    const std::size_t n = cols();
    for (;;) {
      // reduced costs: cost_j - sum_i cost_{basis_i} * t_ij
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < n && !enter; ++j) {
        if (!allowed[j]) continue;
        Rational rc = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i)
          if (t_[i][j] != 0) rc -= cost[basis_[i]] * t_[i][j];
        if (rc > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][*enter] <= 0) continue;
        Rational ratio = t_[i][n] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

inline Result maximize(const Problem& p) {
  const std::size_t n = p.num_vars;
  const std::size_t mle = p.le.size(), meq = p.eq.size(), m = mle + meq;
  // columns: x+ (n), x- (n), slacks (mle), artificials (m)
  const std::size_t art0 = 2 * n + mle;
  const std::size_t total = art0 + m;
  detail::Tableau tab(m, total);
  auto& t = tab.rows();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = i < mle ? p.le[i] : p.eq[i - mle];
    Rational rhs = i < mle ? p.le_rhs[i] : p.eq_rhs[i - mle];
    if (row.size() != n) fail(ErrorKind::DimMismatch, "LP row length mismatch");
    Rational sign = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = sign * row[j];
      t[i][n + j] = -sign * row[j];
    }
    if (i < mle) t[i][2 * n + i] = sign;
    t[i][art0 + i] = 1;
    t[i][total] = sign * rhs;
    tab.basis()[i] = art0 + i;
  }

  std::vector<bool> all(total, true);
  std::vector<Rational> phase1(total, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  tab.optimize(phase1, all);
  Rational infeas = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis()[i] >= art0) infeas += t[i][total];
  if (infeas != 0) return {Status::Infeasible, 0, {}};

  // drive zero-valued artificials out of the basis where possible
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis()[i] < art0) continue;
    for (std::size_t j = 0; j < art0; ++j)
      if (t[i][j] != 0) {
        tab.pivot(i, j);
        break;
      }
  }

  std::vector<bool> no_art(total, true);
  for (std::size_t j = art0; j < total; ++j) no_art[j] = false;
  std::vector<Rational> cost(total, 0);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = p.objective[j];
    cost[n + j] = -p.objective[j];
  }
  if (!tab.optimize(cost, no_art)) return {Status::Unbounded, 0, {}};

  Result res{Status::Optimal, 0, std::vector<Rational>(n, 0)};
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t b = tab.basis()[i];
    if (b < n)
      res.x[b] += t[i][total];
    else if (b < 2 * n)
      res.x[b - n] -= t[i][total];
  }
  for (std::size_t j = 0; j < n; ++j) res.value += p.objective[j] * res.x[j];
  return res;
}

inline bool feasible(const Problem& p) {
  Problem q = p;
  q.objective.assign(p.num_vars, 0);
  return maximize(q).status != Status::Infeasible;
}

/// One feasible point, if any.
inline std::optional<std::vector<Rational>> find_point(const Problem& p) {
  Problem q = p;
  q.objective.assign(p.num_vars, 0);
  auto r = maximize(q);
  if (r.status == Status::Infeasible) return std::nullopt;
  return r.x;
}

}  // namespace toriclg::lp
