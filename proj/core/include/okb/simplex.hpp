#pragma once

#include "okb/linalg.hpp"

namespace okb {

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  QVec x;              // primal solution (size = #columns) when Optimal
  Rational objective;  // c.x at the optimum
  // When Infeasible: a functional with farkas.col >= 0 for every column of a
  // and farkas.b < 0, certifying that {x >= 0 : a x = b} is empty.
  QVec farkas;
};

// Maximizes c.x subject to a x = b, x >= 0, by the two-phase simplex method
// over exact rationals.  Bland's rule guarantees termination; there are no
// tolerances anywhere.  Intended for the small systems that arise from cone
// membership questions (dozens of rows/columns at most).
LpResult lp_maximize(const QMat& a, const QVec& b, const QVec& c);

}  // namespace okb
