#include "okb/simplex.hpp"

#include <cassert>

#include "okb/errors.hpp"

namespace okb {

namespace {

// Dense simplex tableau.  Columns: n real variables, then m artificials,
// then the right-hand side.  The objective row stores reduced costs
// z_j = y.col_j - c_j, so a column improves the maximization while z_j < 0.
struct Tableau {
  QMat t;                  // m x (n + m + 1)
  QVec z;                  // n + m entries
  std::vector<int> basis;  // basis[r] = column basic in row r
  int n = 0;               // real variable count

  int rows() const { return static_cast<int>(t.size()); }
  int cols() const { return n + rows(); }
  Rational& rhs(int r) { return t[r].back(); }

  void pivot(int r, int col) {
    Rational inv = 1 / t[r][col];
    for (Rational& v : t[r]) v *= inv;
    for (int i = 0; i < rows(); ++i) {
      if (i == r || t[i][col] == 0) continue;
      Rational f = t[i][col];
      for (size_t j = 0; j < t[i].size(); ++j) t[i][j] -= f * t[r][j];
    }
    if (z[col] != 0) {
      Rational f = z[col];
      for (size_t j = 0; j < z.size(); ++j) z[j] -= f * t[r][j];
    }
    basis[r] = col;
  }

  // Recomputes the reduced-cost row for the cost vector c (length n + m).
  void load_costs(const QVec& c) {
    z.assign(static_cast<size_t>(cols()), Rational(0));
    for (int j = 0; j < cols(); ++j) z[j] = -c[j];
    for (int r = 0; r < rows(); ++r) {
      if (c[basis[r]] == 0) continue;
      Rational f = c[basis[r]];
      for (int j = 0; j < cols(); ++j) z[j] += f * t[r][j];
    }
  }

  // Bland's rule iteration among columns < limit.  Returns false when
  // optimal, throws nothing; sets *unbounded when a ray is found.
  bool step(int limit, bool* unbounded) {
    int enter = -1;
    for (int j = 0; j < limit; ++j)
      if (sign(z[j]) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return false;
    int leave = -1;
    Rational best;
    for (int i = 0; i < rows(); ++i) {
      if (sign(t[i][enter]) <= 0) continue;
      Rational ratio = rhs(i) / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) {
      *unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpResult lp_maximize(const QMat& a, const QVec& b, const QVec& c) {
  int m = static_cast<int>(a.size());
  int n = m == 0 ? static_cast<int>(c.size()) : static_cast<int>(a[0].size());
  if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n)
    throw PreconditionError("lp_maximize: dimension mismatch");
  for (const QVec& row : a)
    if (static_cast<int>(row.size()) != n)
      throw PreconditionError("lp_maximize: ragged constraint matrix");

  // Orient rows so the right-hand side is nonnegative, remembering the signs
  // for the Farkas certificate.
  std::vector<int> row_sign(m, 1);
  Tableau tab;
  tab.n = n;
  tab.t.assign(m, QVec(static_cast<size_t>(n + m + 1), Rational(0)));
  for (int i = 0; i < m; ++i) {
    row_sign[i] = sign(b[i]) < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) tab.t[i][j] = Rational(row_sign[i]) * a[i][j];
    tab.t[i][n + i] = 1;
    tab.rhs(i) = Rational(row_sign[i]) * b[i];
    tab.basis.push_back(n + i);
  }

  // Phase 1: maximize -(sum of artificials).
  QVec phase1(static_cast<size_t>(n + m), Rational(0));
  for (int i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.load_costs(phase1);
  bool unbounded = false;
  while (tab.step(tab.cols(), &unbounded)) {
  }
  assert(!unbounded);  // phase-1 objective is bounded above by zero

  Rational infeasibility = 0;
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] >= n) infeasibility += tab.rhs(r);
  if (sign(infeasibility) > 0) {
    LpResult res;
    res.status = LpResult::Status::Infeasible;
    // y_i = z[n+i] - 1 satisfies y.col >= 0 / y.rhs < 0 in the sign-flipped
    // system; undo the row flips to certify the original one.
    res.farkas.resize(m);
    for (int i = 0; i < m; ++i)
      res.farkas[i] = Rational(row_sign[i]) * (tab.z[n + i] - 1);
    return res;
  }

  // Drive leftover artificials out of the basis; fully zero rows are
  // redundant constraints and get dropped.
  for (int r = m - 1; r >= 0; --r) {
    if (tab.basis[r] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (tab.t[r][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      tab.pivot(r, col);
    } else {
      assert(tab.rhs(r) == 0);
      tab.t.erase(tab.t.begin() + r);
      tab.basis.erase(tab.basis.begin() + r);
    }
  }

  // Phase 2 over the real columns only.
  QVec phase2(static_cast<size_t>(n + tab.rows()), Rational(0));
  for (int j = 0; j < n; ++j) phase2[j] = c[j];
  // Columns shifted if rows were dropped; rebuild the tableau width first.
  for (QVec& row : tab.t) {
    QVec next(static_cast<size_t>(n + tab.rows() + 1), Rational(0));
    for (int j = 0; j < n; ++j) next[j] = row[j];
    next.back() = row.back();
    row = std::move(next);
  }
  tab.load_costs(phase2);
  while (tab.step(n, &unbounded)) {
  }

  LpResult res;
  if (unbounded) {
    res.status = LpResult::Status::Unbounded;
    return res;
  }
  res.status = LpResult::Status::Optimal;
  res.x.assign(static_cast<size_t>(n), Rational(0));
  for (int r = 0; r < tab.rows(); ++r) {
    assert(tab.basis[r] < n);
    res.x[tab.basis[r]] = tab.rhs(r);
  }
  res.objective = dot(res.x, c);
  return res;
}

}  // namespace okb
