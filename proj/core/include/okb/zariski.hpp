#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "okb/divisor.hpp"
#include "okb/surface_model.hpp"

namespace okb {

// D = positive + negative with: positive nef, negative supported on a
// negative-definite set of curves with strictly positive coefficients, and
// positive orthogonal to every support curve.  Unique when it exists.
struct ZariskiDecomposition {
  DivisorClass positive;
  DivisorClass negative;
  CurveSubset support;  // curves carrying a strictly positive coefficient
  QVec coefficients;    // parallel to support.indices()

  Rational coefficient(int curve) const;  // 0 for curves outside the support
};

// pre: d pseudoeffective (PreconditionError otherwise).
ZariskiDecomposition decompose(const SurfaceModel& m, const DivisorClass& d);

// vol(d) = P.P for the positive part; positive exactly when d is big.
// pre: d pseudoeffective.
Rational volume(const SurfaceModel& m, const DivisorClass& d);

// All Zariski chambers, identified by their supports: the nonempty
// negative-definite subsets of the negative curves.  Canonical order:
// cardinality first, then lexicographic on indices.  The nef chamber
// (empty support) is not listed.
std::vector<CurveSubset> enumerate_chambers(const SurfaceModel& m);

// Same count without materializing the subsets.
long chamber_count(const SurfaceModel& m);

// First pair (i, j) of meeting negative curves with
// (Ni.Nj)^2 < Ni^2 * Nj^2, in lex order; nullopt when the model satisfies
// the pairwise intersection condition.
std::optional<std::pair<int, int>> star_witness(const SurfaceModel& m);
bool satisfies_star(const SurfaceModel& m);

// True when every chamber's Gram matrix is diagonal (no two meeting curves
// ever share a chamber), i.e. the chamber structure looks like a product of
// orthogonal pieces.
bool is_simple_weyl(const SurfaceModel& m);

// Curves orthogonal to the positive part of d: the negative curves along
// which d degenerates.  pre: d big.
CurveSubset b_plus_null(const SurfaceModel& m, const DivisorClass& d);

}  // namespace okb
