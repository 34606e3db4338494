#pragma once

#include <string>
#include <vector>

#include "okb/rational.hpp"

namespace okb {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  bool lex_less(const Point2& o) const { return x < o.x || (x == o.x && y < o.y); }
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rational& s, const Point2& a);

// z-component of (a - o) x (b - o); positive for a left turn.
Rational cross(const Point2& o, const Point2& a, const Point2& b);

// Convex polygon over exact rationals, stored canonically:
//   - vertices in counterclockwise order starting at the lex-smallest,
//   - no three consecutive vertices collinear.
// Degenerate convex sets are first-class: a point has one vertex, a segment
// two (lex-smaller endpoint first), and the empty set has none.  Equality of
// vertex lists is equality of the sets.
class RationalPolygon {
 public:
  RationalPolygon() = default;  // empty set

  static RationalPolygon from_points(std::vector<Point2> points);  // convex hull
  static RationalPolygon point(Point2 p);
  static RationalPolygon segment(Point2 a, Point2 b);

  const std::vector<Point2>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  // -1 empty, 0 point, 1 segment, 2 full-dimensional.
  int dimension() const;

  Rational area() const;  // shoelace; zero for dimension < 2
  bool contains(const Point2& p) const;

  friend bool operator==(const RationalPolygon&, const RationalPolygon&) = default;

  std::string to_string() const;

 private:
  std::vector<Point2> vertices_;
};

// Exact Minkowski sum by the rotating edge merge (hull of pairwise vertex
// sums is the test oracle, not the implementation).
RationalPolygon minkowski_sum(const RationalPolygon& p, const RationalPolygon& q);

// Dilation about the origin; s must be >= 0.
RationalPolygon scale(const RationalPolygon& p, const Rational& s);

RationalPolygon intersection(const RationalPolygon& p, const RationalPolygon& q);

// Whether outer contains inner (every point; convexity reduces it to the
// vertices of inner).  The empty set is contained in everything.
bool contains(const RationalPolygon& outer, const RationalPolygon& inner);

// area(p) - area(p intersect q): how much of p lies outside q.
Rational difference_area(const RationalPolygon& p, const RationalPolygon& q);

struct LabeledPolygon {
  std::string label;
  RationalPolygon polygon;
};

// Deterministic standalone SVG for a list of polygons.  Geometry is mapped
// at 100 SVG units per lattice unit with a 5% bounding-box margin; every
// coordinate is an exact rational rounded half-to-even at 6 decimals, so the
// output is byte-stable across runs and platforms.
std::string polygons_to_svg(const std::vector<LabeledPolygon>& items);

}  // namespace okb
