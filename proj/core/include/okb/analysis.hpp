#pragma once

#include <vector>

#include "okb/divisor.hpp"
#include "okb/okounkov.hpp"
#include "okb/polygon.hpp"
#include "okb/surface_model.hpp"

namespace okb {

// rank-many ample flag curves with linearly independent classes, built
// deterministically: the sum of the nef extremal rays, perturbed by 1/m
// along each basis direction for the smallest power-of-two m that keeps
// every class ample.  Throws ModelError when the model has no ample class.
std::vector<Flag> ample_flag_battery(const SurfaceModel& m);

// Whether two big classes share their Okounkov polygons for every battery
// flag.  By the very-general-flag convention the polygons only see positive
// parts, so this is asserted against direct equality of the Zariski positive
// parts (InternalError on disagreement).  pre: both classes big.
bool positive_parts_equal(const SurfaceModel& m, const DivisorClass& d1,
                          const DivisorClass& d2);

struct EquivalenceReport {
  bool equivalent = false;            // both criteria hold
  bool polygons_equal = false;        // positive-part polygons agree on the battery
  bool curve_products_equal = false;  // negative parts meet every curve equally
  std::vector<int> curve_mismatches;  // curves where the products differ
  std::vector<Flag> battery;
};

// Numerical-equivalence test for pseudoeffective classes: the positive parts
// are compared through Okounkov polygons over the ample battery, the
// negative parts through intersection numbers with every negative curve.
EquivalenceReport numerically_equivalent(const SurfaceModel& m, const DivisorClass& d1,
                                         const DivisorClass& d2);

struct FujitaReport {
  RationalPolygon d_polygon;         // Okounkov polygon of the big class
  RationalPolygon a_polygon;         // polygon of the nef approximation
  bool inner_contained = false;      // a_polygon inside d_polygon
  Rational inner_gap;                // area of d_polygon outside a_polygon
  Rational minimal_delta;            // least s-1 >= 0 with d_polygon inside (1+s)... see below
  RationalPolygon scaled_a_polygon;  // (1 + minimal_delta) * a_polygon
  Rational outer_gap;                // area of the scaled polygon outside d_polygon
  Rational beta;
  bool gaps_within_beta = false;
};

// Polygon-level approximation report for a big class d and a nef class a
// with d - a pseudoeffective: containment and area gap of the polygon of a
// inside the polygon of d, plus the minimal dilation factor 1 + delta of the
// polygon of a (about the origin) that swallows the polygon of d, with the
// area it overshoots by.  Requires the origin to lie in the polygon of a.
FujitaReport fujita_report(const SurfaceModel& m, const DivisorClass& d,
                           const DivisorClass& a, const Flag& flag, const Rational& beta);

}  // namespace okb
