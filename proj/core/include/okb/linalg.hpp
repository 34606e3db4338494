#pragma once

#include <optional>
#include <vector>

#include "okb/rational.hpp"

namespace okb {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major, rectangular

Rational dot(const QVec& a, const QVec& b);
QVec mat_vec(const QMat& m, const QVec& v);
bool is_symmetric(const QMat& m);
QMat submatrix(const QMat& m, const std::vector<int>& indices);  // principal

// Determinant of a square integer matrix by fraction-free Bareiss
// elimination: every intermediate value is an exact minor, so nothing but
// integer divisions that are known to be exact ever occur.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

// Rational determinant: clears denominators row by row, then runs Bareiss.
Rational determinant(const QMat& m);

// Solves the square system a*x = b by exact Gaussian elimination.
// Returns nullopt when a is singular.
std::optional<QVec> solve_square(QMat a, QVec b);

// Solves a general (possibly non-square) system a*x = b exactly.
// Returns nullopt when inconsistent; free variables are set to zero.
std::optional<QVec> solve_general(QMat a, QVec b);

int rank(QMat m);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Inertia of a symmetric rational matrix via congruence diagonalization
// (simultaneous row/column operations preserve the signature by Sylvester's
// law of inertia; no eigenvalues are ever computed).
Signature signature(QMat symmetric);

// True iff the symmetric matrix is negative definite, tested through the
// leading-principal-minor signs: the k-th minor must have sign (-1)^k.
bool negative_definite(const QMat& symmetric);

}  // namespace okb
