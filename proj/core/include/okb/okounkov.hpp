#pragma once

#include <utility>
#include <vector>

#include "okb/divisor.hpp"
#include "okb/polygon.hpp"
#include "okb/surface_model.hpp"
#include "okb/zariski.hpp"

namespace okb {

// A full flag on the surface: a curve plus a very general point on it.
// Only the curve class is data; "very general" is the standing convention
// that no negative curve other than the flag curve itself passes through
// the point.
struct Flag {
  DivisorClass curve;
};

// One maximal parameter interval of the Zariski chamber walk
// t -> Z(d - t*flag).  On [t_lo, t_hi] the decomposition varies affinely:
// the support is constant (coefficients may reach zero exactly at the
// endpoints), so the boundary functions alpha (vanishing order at the flag
// point) and beta (alpha + P_t . flag curve) are linear and are stored by
// their endpoint values.
struct WalkSegment {
  Rational t_lo;
  Rational t_hi;
  CurveSubset support;
  Rational alpha_lo, alpha_hi;
  Rational beta_lo, beta_hi;

  Rational alpha_at(const Rational& t) const;
  Rational beta_at(const Rational& t) const;
};

struct ChamberWalk {
  Rational a;   // start: coefficient of the flag curve in the negative part of d
  Rational mu;  // end: largest t with d - t*flag pseudoeffective
  std::vector<WalkSegment> segments;  // contiguous cover of [a, mu]
};

// pre: d big; flag curve admissible for d, meaning it is either one of the
// model's negative curves not orthogonal to the positive part of d, or nef.
ChamberWalk chamber_walk(const SurfaceModel& m, const DivisorClass& d, const Flag& flag);

// The Okounkov body of a big class with respect to the flag: the region
// {(t, y) : a <= t <= mu, alpha(t) <= y <= beta(t)}, a convex polygon with
// exact rational vertices.  Satisfies 2 * area = volume(d).
RationalPolygon okounkov_polygon(const SurfaceModel& m, const DivisorClass& d,
                                 const Flag& flag);

// Boundary values at one parameter; when t is a breakpoint both adjacent
// segments are evaluated and must agree (InternalError otherwise).
std::pair<Rational, Rational> alpha_beta_at(const SurfaceModel& m, const DivisorClass& d,
                                            const Flag& flag, const Rational& t);

// Okounkov polygon extended to every nef class: big classes walk the
// chambers; nef-but-not-big classes degenerate to the vertical segment
// {0} x [0, d . flag]; zero degenerates to the origin.  The flag curve must
// be big and nef here.
RationalPolygon nef_class_polygon(const SurfaceModel& m, const DivisorClass& d,
                                  const Flag& flag);

}  // namespace okb
