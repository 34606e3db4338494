#include "okb/linalg.hpp"

#include <cassert>
#include <cstddef>

#include "okb/errors.hpp"

namespace okb {

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: dimension mismatch");
  Rational acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

QVec mat_vec(const QMat& m, const QVec& v) {
  QVec out;
  out.reserve(m.size());
  for (const QVec& row : m) out.push_back(dot(row, v));
  return out;
}

bool is_symmetric(const QMat& m) {
  size_t n = m.size();
  for (const QVec& row : m)
    if (row.size() != n) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

QMat submatrix(const QMat& m, const std::vector<int>& indices) {
  QMat out(indices.size(), QVec(indices.size()));
  for (size_t i = 0; i < indices.size(); ++i)
    for (size_t j = 0; j < indices.size(); ++j)
      out[i][j] = m[indices[i]][indices[j]];
  return out;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Integer prev_pivot = 1;
  int det_sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      det_sign = -det_sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        // Exact by the Bareiss identity: prev_pivot divides t.
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev_pivot = m[k][k];
  }
  return det_sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

Rational determinant(const QMat& m) {
  size_t n = m.size();
  for (const QVec& row : m)
    if (row.size() != n) throw PreconditionError("determinant: matrix not square");
  if (n == 0) return 1;

  // Scale each row to integers, remembering the factor pulled out.
  std::vector<std::vector<Integer>> z(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (size_t i = 0; i < n; ++i) {
    Integer lcm = 1;
    for (size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][j].get_den().get_mpz_t());
    for (size_t j = 0; j < n; ++j) {
      Rational scaled = m[i][j] * Rational(lcm);
      assert(scaled.get_den() == 1);
      z[i][j] = scaled.get_num();
    }
    scale /= Rational(lcm);
  }
  return scale * Rational(bareiss_determinant(std::move(z)));
}

namespace {

// Row-reduces [a | b] in place; returns pivot columns.  On exit a is in row
// echelon form with unit pivots and zeros above and below each pivot.
std::vector<int> reduce(QMat& a, QVec& b) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivot_cols;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  return pivot_cols;
}

}  // namespace

std::optional<QVec> solve_square(QMat a, QVec b) {
  size_t n = a.size();
  if (b.size() != n) throw PreconditionError("solve_square: dimension mismatch");
  for (const QVec& row : a)
    if (row.size() != n) throw PreconditionError("solve_square: matrix not square");
  std::vector<int> pivots = reduce(a, b);
  if (pivots.size() != n) return std::nullopt;
  return b;
}

std::optional<QVec> solve_general(QMat a, QVec b) {
  size_t rows = a.size();
  if (b.size() != rows) throw PreconditionError("solve_general: dimension mismatch");
  size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivots = reduce(a, b);
  for (size_t i = pivots.size(); i < rows; ++i)
    if (b[i] != 0) return std::nullopt;  // inconsistent row 0 = b[i]
  QVec x(cols, Rational(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = b[k];
  return x;
}

int rank(QMat m) {
  if (m.empty()) return 0;
  QVec dummy(m.size(), Rational(0));
  return static_cast<int>(reduce(m, dummy).size());
}

Signature signature(QMat m) {
  if (!is_symmetric(m)) throw PreconditionError("signature: matrix not symmetric");
  size_t n = m.size();
  Signature sig;

  // Congruence diagonalization: apply each row operation and the matching
  // column operation, so the diagonal entries carry the inertia.
  for (size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      size_t d = k + 1;
      while (d < n && m[d][d] == 0) ++d;
      if (d < n) {
        std::swap(m[k], m[d]);
        for (size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][d]);
      } else {
        size_t j = k + 1;
        while (j < n && m[k][j] == 0) ++j;
        if (j == n) {
          ++sig.zero;
          continue;  // row k is zero from column k on; so is column k
        }
        // All-zero diagonal block: fold column/row j into k to expose
        // m[k][k] = 2*m[k][j] != 0.
        for (size_t i = 0; i < n; ++i) m[k][i] += m[j][i];
        for (size_t i = 0; i < n; ++i) m[i][k] += m[i][j];
      }
    }
    Rational pivot = m[k][k];
    if (sign(pivot) > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / pivot;
      for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
      for (size_t j = 0; j < n; ++j) m[j][i] -= f * m[j][k];
    }
  }
  return sig;
}

bool negative_definite(const QMat& m) {
  if (!is_symmetric(m)) throw PreconditionError("negative_definite: matrix not symmetric");
  size_t n = m.size();
  std::vector<int> idx;
  for (size_t k = 1; k <= n; ++k) {
    idx.push_back(static_cast<int>(k) - 1);
    int expected = (k % 2 == 0) ? 1 : -1;
    if (sign(determinant(submatrix(m, idx))) != expected) return false;
  }
  return true;
}

}  // namespace okb
