#pragma once

#include <string>
#include <vector>

#include "okb/divisor.hpp"
#include "okb/linalg.hpp"

namespace okb {

struct NamedClass {
  std::string label;
  DivisorClass cls;
};

// Numerical model of a smooth projective surface whose pseudoeffective cone
// is rational polyhedral: the intersection lattice, the finitely many
// irreducible curves of negative self-intersection, and a generating set for
// the pseudoeffective cone.
//
// The model owner asserts that the data comes from an actual surface; see
// validate() for the consistency conditions that are checked mechanically.
struct SurfaceModel {
  std::string name;
  std::vector<std::string> basis_labels;
  QMat gram;  // symmetric, signature (1, rank-1)
  std::vector<NamedClass> negative_curves;
  std::vector<NamedClass> effective_generators;  // must include all negative curves

  int rank() const { return static_cast<int>(gram.size()); }
  const DivisorClass& curve(int i) const { return negative_curves[i].cls; }
  const std::string& curve_label(int i) const { return negative_curves[i].label; }
  DivisorClass basis_class(int i) const;

  // Index of the negative curve with exactly these coordinates, or -1.
  int find_negative_curve(const DivisorClass& cls) const;
};

// Intersection number a.b through the Gram matrix.
Rational intersect(const SurfaceModel& m, const DivisorClass& a, const DivisorClass& b);
Rational self_intersection(const SurfaceModel& m, const DivisorClass& a);

// Whether the Gram matrix of the given curves is negative definite.
bool is_negative_definite(const SurfaceModel& m, const CurveSubset& curves);

// Gram matrix of a curve subset: entry (i,j) = N_i . N_j.
QMat curve_gram(const SurfaceModel& m, const CurveSubset& curves);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Structural checks: dimensions agree, Gram symmetric with signature
// (1, rank-1), every negative curve has negative self-intersection and
// appears among the effective generators, labels are consistent and unique.
ValidationReport validate(const SurfaceModel& m);

// Throws ModelError with the report text when validation fails.
void require_valid(const SurfaceModel& m);

}  // namespace okb
