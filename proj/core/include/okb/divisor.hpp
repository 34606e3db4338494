#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "okb/linalg.hpp"
#include "okb/rational.hpp"

namespace okb {

// A divisor class, written in the fixed basis of the ambient lattice.
// Pure value type; all semantics (intersection numbers, positivity) live on
// the surface model.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(QVec coords) : coords_(std::move(coords)) {}
  static DivisorClass zero(int rank) { return DivisorClass(QVec(rank, Rational(0))); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[i]; }
  Rational& operator[](int i) { return coords_[i]; }
  const QVec& coords() const { return coords_; }

  bool is_zero() const;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  // Lexicographic; gives deterministic orderings everywhere a set of classes
  // is sorted.
  bool lex_less(const DivisorClass& other) const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& s);

  // Smallest positive multiple with integer coprime coordinates.
  // Only defined for nonzero classes.
  DivisorClass primitive() const;

  std::string to_string() const;  // "(a, b, c)" with canonical rationals

 private:
  QVec coords_;
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a);
DivisorClass operator*(const Rational& s, DivisorClass a);

// A subset of the model's negative curves, stored as strictly increasing
// indices into SurfaceModel::negative_curves.
class CurveSubset {
 public:
  CurveSubset() = default;
  explicit CurveSubset(std::vector<int> indices);

  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(int curve) const;
  const std::vector<int>& indices() const { return indices_; }

  CurveSubset with(int curve) const;  // insertion keeps order

  friend bool operator==(const CurveSubset&, const CurveSubset&) = default;
  // Canonical enumeration order: by cardinality, then lexicographic.
  bool canonical_less(const CurveSubset& other) const;

  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  std::vector<int> indices_;
};

}  // namespace okb
