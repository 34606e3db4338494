#pragma once

#include <vector>

#include "okb/divisor.hpp"
#include "okb/okounkov.hpp"
#include "okb/polygon.hpp"
#include "okb/surface_model.hpp"

namespace okb {

// Negative curves orthogonal to c.  pre: c nef.
CurveSubset null_set(const SurfaceModel& m, const DivisorClass& c);

// The basis element attached to one Zariski chamber, for a big and nef flag
// curve c: solve  gram(chamber) * a = -(c . N_i)_i  and form
// c + sum a_i N_i, then scale by the smallest positive integer making the
// coordinates integral.  The result is big and nef and meets every chamber
// curve in zero.
DivisorClass minkowski_element(const SurfaceModel& m, const Flag& flag,
                               const CurveSubset& chamber);

struct MinkowskiBasisElement {
  enum class Origin { Flag, NefRay, Chamber };
  DivisorClass cls;
  Origin origin;
  CurveSubset chamber;       // populated when origin == Chamber
  RationalPolygon polygon;   // Okounkov polygon w.r.t. the basis flag
};

// Minkowski basis for the flag: the flag class itself, the nef-but-not-big
// extremal rays, and one element per Zariski chamber, deduplicated by ray
// (first occurrence wins).  Every nef class decomposes nonnegatively over
// the elements with matching Okounkov polygons; see minkowski_decompose.
struct MinkowskiBasis {
  Flag flag;
  std::vector<MinkowskiBasisElement> elements;
};

// pre: flag curve big and nef.
MinkowskiBasis minkowski_basis(const SurfaceModel& m, const Flag& flag);

// Chambers whose support meets null_set(c) / negative-definite nonempty
// subsets of null_set(c).  pre: c big and nef.
long nz_count(const SurfaceModel& m, const DivisorClass& c);
long null_zar_count(const SurfaceModel& m, const DivisorClass& c);

// Chamber count of the model with the curves in null_set(c) deleted from
// the intersection matrix; equals chamber_count - nz_count.
long reduced_chamber_count(const SurfaceModel& m, const DivisorClass& c);

// Predicted basis cardinalities:
//   ample flag:            1 + #nef-not-big rays + #chambers
//   big-and-nef flag:      1 + #nef-not-big rays + #chambers - nz_count
//                          (valid under the pairwise intersection condition;
//                           throws StarViolationError when the model fails it)
//   upper bound, any flag: 1 + #nef-not-big rays + #chambers - null_zar_count
long cardinality_ample(const SurfaceModel& m);
long cardinality_bignef(const SurfaceModel& m, const DivisorClass& c);
long cardinality_upper_bound(const SurfaceModel& m, const DivisorClass& c);

struct MinkowskiDecomposition {
  MinkowskiBasis basis;
  QVec coefficients;        // parallel to basis.elements, all >= 0
  RationalPolygon polygon;  // Okounkov polygon of the decomposed class
};

// Writes a nef class as a nonnegative combination of basis elements whose
// scaled Okounkov polygons Minkowski-sum to the polygon of the class.
// Searches the vertex solutions of {a >= 0 : sum a_i M_i = d} and returns
// the first one that verifies at the polygon level.  pre: d nef.
MinkowskiDecomposition minkowski_decompose(const SurfaceModel& m, const DivisorClass& d,
                                           const Flag& flag);

}  // namespace okb
