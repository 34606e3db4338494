#include "okb/analysis.hpp"

#include <algorithm>
#include <optional>

#include "okb/cones.hpp"
#include "okb/errors.hpp"
#include "okb/zariski.hpp"

namespace okb {

namespace {

bool is_ample(const SurfaceModel& m, const DivisorClass& d) {
  // Strictly positive against the whole effective cone = interior of nef.
  for (const NamedClass& g : m.effective_generators)
    if (sign(intersect(m, d, g.cls)) <= 0) return false;
  return sign(self_intersection(m, d)) > 0;
}

}  // namespace

std::vector<Flag> ample_flag_battery(const SurfaceModel& m) {
  DivisorClass base = DivisorClass::zero(m.rank());
  for (const DivisorClass& ray : nef_cone(m).extremal_rays) base += ray;
  if (!is_ample(m, base))
    throw ModelError("model has no ample class; cannot build a flag battery");

  // Perturb along each basis direction; halve the step until every perturbed
  // class is still ample and the battery is linearly independent.
  for (Rational step(1); ; step /= 2) {
    std::vector<Flag> battery;
    QMat rows;
    for (int i = 0; i < m.rank(); ++i) {
      DivisorClass f = base;
      f[i] += step;
      battery.push_back(Flag{f});
      rows.push_back(f.coords());
    }
    bool all_ample = std::all_of(battery.begin(), battery.end(),
                                 [&](const Flag& f) { return is_ample(m, f.curve); });
    if (all_ample && determinant(rows) != 0) return battery;
  }
}

namespace {

RationalPolygon positive_part_polygon(const SurfaceModel& m, const DivisorClass& p,
                                      const Flag& flag) {
  return nef_class_polygon(m, p, flag);
}

}  // namespace

bool positive_parts_equal(const SurfaceModel& m, const DivisorClass& d1,
                          const DivisorClass& d2) {
  if (!is_big(m, d1) || !is_big(m, d2))
    throw PreconditionError("positive_parts_equal requires big classes");
  bool polygons = true;
  for (const Flag& flag : ample_flag_battery(m))
    if (okounkov_polygon(m, d1, flag) != okounkov_polygon(m, d2, flag)) {
      polygons = false;
      break;
    }
  bool direct = decompose(m, d1).positive == decompose(m, d2).positive;
  if (polygons != direct)
    throw InternalError("polygon battery disagrees with direct positive-part comparison");
  return polygons;
}

EquivalenceReport numerically_equivalent(const SurfaceModel& m, const DivisorClass& d1,
                                         const DivisorClass& d2) {
  if (!is_pseudoeffective(m, d1) || !is_pseudoeffective(m, d2))
    throw PreconditionError("numerically_equivalent requires pseudoeffective classes");

  EquivalenceReport report;
  report.battery = ample_flag_battery(m);

  ZariskiDecomposition z1 = decompose(m, d1);
  ZariskiDecomposition z2 = decompose(m, d2);

  report.polygons_equal = true;
  for (const Flag& flag : report.battery)
    if (positive_part_polygon(m, z1.positive, flag) !=
        positive_part_polygon(m, z2.positive, flag)) {
      report.polygons_equal = false;
      break;
    }

  report.curve_products_equal = true;
  for (int i = 0; i < static_cast<int>(m.negative_curves.size()); ++i)
    if (intersect(m, z1.negative, m.curve(i)) != intersect(m, z2.negative, m.curve(i))) {
      report.curve_products_equal = false;
      report.curve_mismatches.push_back(i);
    }

  report.equivalent = report.polygons_equal && report.curve_products_equal;
  return report;
}

namespace {

// Least lambda >= 0 with v inside lambda * body, for a convex body
// containing the origin; nullopt when no dilation of body covers v.
std::optional<Rational> ray_covering_factor(const RationalPolygon& body, const Point2& v) {
  if (v == Point2{0, 0}) return Rational(0);
  switch (body.dimension()) {
    case 0:
      return std::nullopt;  // body == {0}, v != 0
    case 1: {
      // Segment through the origin.  Project onto its direction; the origin
      // may be an endpoint or interior, so each sign of the projection has
      // its own extreme point.
      const Point2& a = body.vertices()[0];
      const Point2& b = body.vertices()[1];
      if (cross(a, b, v) != 0) return std::nullopt;
      Point2 r = b - a;
      Rational pos_a = a.x * r.x + a.y * r.y;
      Rational pos_b = b.x * r.x + b.y * r.y;
      Rational pos_v = v.x * r.x + v.y * r.y;
      if (sign(pos_v) > 0) {
        if (sign(pos_b) <= 0) return std::nullopt;
        return pos_v / pos_b;
      }
      if (sign(pos_v) < 0) {
        if (sign(pos_a) >= 0) return std::nullopt;
        return pos_v / pos_a;
      }
      return Rational(0);  // collinear with zero projection: v is the origin
    }
    default: {
      // For each edge, outward normal n has n.x <= n.p on the body and
      // n.x <= s*(n.p) on the dilated body; n.p >= 0 since 0 is inside.
      std::optional<Rational> needed;
      size_t n = body.vertices().size();
      for (size_t i = 0; i < n; ++i) {
        const Point2& p = body.vertices()[i];
        const Point2& q = body.vertices()[(i + 1) % n];
        Rational normal_x = q.y - p.y;
        Rational normal_y = p.x - q.x;
        Rational rhs = normal_x * p.x + normal_y * p.y;
        Rational value = normal_x * v.x + normal_y * v.y;
        if (sign(rhs) == 0) {
          if (sign(value) > 0) return std::nullopt;  // edge through origin, v strictly outside
        } else {
          Rational s = value / rhs;
          if (!needed || s > *needed) needed = s;
        }
      }
      if (!needed) return Rational(0);
      return std::max(Rational(0), *needed);
    }
  }
}

}  // namespace

FujitaReport fujita_report(const SurfaceModel& m, const DivisorClass& d,
                           const DivisorClass& a, const Flag& flag, const Rational& beta) {
  if (sign(beta) <= 0) throw PreconditionError("beta must be positive");
  if (!is_big(m, d)) throw PreconditionError("fujita_report requires a big class");
  if (!is_nef(m, a)) throw PreconditionError("the approximating class must be nef");
  if (!is_pseudoeffective(m, d - a))
    throw PreconditionError("the approximating class must sit below the big class");

  FujitaReport report;
  report.beta = beta;
  report.d_polygon = okounkov_polygon(m, d, flag);
  report.a_polygon = is_big(m, a) ? okounkov_polygon(m, a, flag)
                                  : nef_class_polygon(m, a, flag);
  report.inner_contained = contains(report.d_polygon, report.a_polygon);
  report.inner_gap = difference_area(report.d_polygon, report.a_polygon);

  if (!report.a_polygon.contains({0, 0}))
    throw PreconditionError(
        "origin missing from the approximation polygon; no dilation can cover");
  Rational factor = 1;
  for (const Point2& v : report.d_polygon.vertices()) {
    std::optional<Rational> s = ray_covering_factor(report.a_polygon, v);
    if (!s)
      throw PreconditionError(
          "no dilation of the approximation polygon covers the body");
    factor = std::max(factor, *s);
  }
  report.minimal_delta = factor - 1;
  report.scaled_a_polygon = scale(report.a_polygon, factor);
  report.outer_gap = difference_area(report.scaled_a_polygon, report.d_polygon);
  report.gaps_within_beta = report.inner_gap < beta && report.outer_gap < beta;
  return report;
}

}  // namespace okb
