#include "hyparr/lp.hpp"

#include <optional>
#include <stdexcept>

namespace hyparr {

namespace {

struct Tableau {
  std::vector<QVector> rows;  // last entry is the right-hand side
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k <= cols; ++k)
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
    }
    basis[r] = c;
  }

  // Maximizes cost . x over columns [0, usable). Returns false if unbounded.
  bool maximize(const QVector& cost, std::size_t usable) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < usable && !enter; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (!rows[i][j].is_zero()) reduced -= cost[basis[i]] * rows[i][j];
        if (reduced.sign() > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*enter].sign() <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LPResult lp_optimize(const LinearProgram& p) {
  const std::size_t n = p.dim;
  const std::size_t m = p.constraints.size();
  std::size_t slacks = 0;
  for (const auto& c : p.constraints)
    if (c.relation != Relation::Equal) ++slacks;
  // Columns: x+ (n), x- (n), slacks, artificials (m).
  const std::size_t art0 = 2 * n + slacks;
  Tableau t;
  t.cols = art0 + m;
  t.rows.assign(m, QVector(t.cols + 1));
  t.basis.resize(m);
  std::size_t s = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    const Constraint& c = p.constraints[i];
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint length differs from the LP dimension");
    QVector& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = c.coeffs[j];
      row[n + j] = -c.coeffs[j];
    }
    if (c.relation == Relation::LessEqual) row[s++] = Rational(1);
    if (c.relation == Relation::GreaterEqual) row[s++] = Rational(-1);
    row[t.cols] = c.rhs;
    if (c.rhs.sign() < 0)
      for (auto& x : row) x = -x;
    row[art0 + i] = Rational(1);
    t.basis[i] = art0 + i;
  }

  QVector phase1(t.cols);
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = Rational(-1);
  t.maximize(phase1, t.cols);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= art0 && !t.rows[i][t.cols].is_zero()) return {LPStatus::Infeasible, {}, {}};

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < art0) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < art0 && !col; ++j)
      if (!t.rows[i][j].is_zero()) col = j;
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<long>(i));
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
    }
  }

  QVector cost(t.cols);
  const bool maximize = p.sense == Sense::Maximize;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational c = j < p.objective.size() ? p.objective[j] : Rational{};
    cost[j] = maximize ? c : -c;
    cost[n + j] = -cost[j];
  }
  if (!t.maximize(cost, art0)) return {LPStatus::Unbounded, {}, {}};

  LPResult out{LPStatus::Optimal, {}, QVector(n)};
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const std::size_t b = t.basis[i];
    if (b < n) out.point[b] += t.rows[i][t.cols];
    else if (b < 2 * n) out.point[b - n] -= t.rows[i][t.cols];
  }
  for (std::size_t j = 0; j < n && j < p.objective.size(); ++j) out.value += p.objective[j] * out.point[j];
  return out;
}

}  // namespace hyparr
