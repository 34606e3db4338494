#include "doctest.h"
#include "okb/cones.hpp"
#include "okb/errors.hpp"
#include "okb/fixtures.hpp"
#include "okb/okounkov.hpp"
#include "oracles.hpp"

using namespace okb;
using namespace okb::testing;

namespace {

Point2 qpt(const Rational& x, const Rational& y) { return {x, y}; }

DivisorClass ample_class(const SurfaceModel& m) {
  DivisorClass a = DivisorClass::zero(m.rank());
  for (const DivisorClass& r : nef_cone(m).extremal_rays) a += r;
  return a;
}

// Structural invariants every walk must satisfy; boundary values are then
// cross-checked against a direct decomposition at sample parameters.
void check_walk(const SurfaceModel& m, const DivisorClass& d, const Flag& flag) {
  ChamberWalk walk = chamber_walk(m, d, flag);
  CHECK(walk.a == Rational(0));
  CHECK(walk.mu == mu_max(m, d, flag.curve));
  REQUIRE(!walk.segments.empty());
  CHECK(walk.segments.front().t_lo == walk.a);
  CHECK(walk.segments.back().t_hi == walk.mu);

  int flag_index = m.find_negative_curve(flag.curve);
  std::vector<Rational> samples{walk.a, walk.mu};
  for (std::size_t i = 0; i < walk.segments.size(); ++i) {
    const WalkSegment& seg = walk.segments[i];
    CHECK(seg.t_lo < seg.t_hi);
    if (i > 0) {
      const WalkSegment& prev = walk.segments[i - 1];
      CHECK(prev.t_hi == seg.t_lo);
      CHECK_FALSE(prev.support == seg.support);          // breakpoints are real
      CHECK(prev.alpha_at(seg.t_lo) == seg.alpha_lo);    // boundary is continuous
      CHECK(prev.beta_at(seg.t_lo) == seg.beta_lo);
      samples.push_back(seg.t_lo);
    }
    samples.push_back((seg.t_lo + seg.t_hi) / 2);
    samples.push_back(seg.t_lo + (seg.t_hi - seg.t_lo) / 3);
  }

  for (const Rational& t : samples) {
    auto [alpha, beta] = alpha_beta_at(m, d, flag, t);
    CHECK(sign(alpha) >= 0);
    CHECK(alpha <= beta);
    // Independent check: decompose d - t*flag directly.
    ZariskiDecomposition z = decompose(m, d - t * flag.curve);
    Rational want_alpha =
        flag_index >= 0 ? z.coefficient(flag_index) : Rational(0);
    CHECK(alpha == want_alpha);
    CHECK(beta == want_alpha + intersect(m, z.positive, flag.curve));
  }

  RationalPolygon body = okounkov_polygon(m, d, flag);
  CHECK(2 * body.area() == volume(m, d));
}

}  // namespace

TEST_SUITE("okounkov") {
  TEST_CASE("known bodies on the quartic") {
    SurfaceModel m = fixtures::quartic();
    Flag flag{DivisorClass({2, 2, 1})};

    RationalPolygon body = okounkov_polygon(m, DivisorClass({2, 2, 1}), flag);
    CHECK(body == RationalPolygon::from_points(
                      {qpt(0, 0), qpt(1, 0), qpt(0, 6)}));
    ChamberWalk walk = chamber_walk(m, DivisorClass({2, 2, 1}), flag);
    REQUIRE(walk.segments.size() == 1);
    CHECK(walk.segments[0].support.empty());
    CHECK(walk.mu == Rational(1));

    // (2,2,4) is nef, but the walk immediately enters the {C} chamber.
    RationalPolygon tall = okounkov_polygon(m, DivisorClass({2, 2, 4}), flag);
    CHECK(tall == RationalPolygon::from_points(
                      {qpt(0, 0), qpt(1, 0), qpt(0, 24)}));
    ChamberWalk tall_walk = chamber_walk(m, DivisorClass({2, 2, 4}), flag);
    REQUIRE(tall_walk.segments.size() == 1);
    CHECK(tall_walk.segments[0].support ==
          CurveSubset({2}));

    // (3,2,2) stays nef over the whole walk; the right edge is the fiber
    // over mu, giving a quadrilateral.
    RationalPolygon quad = okounkov_polygon(m, DivisorClass({3, 2, 2}), flag);
    CHECK(quad == RationalPolygon::from_points(
                      {qpt(0, 0), qpt(1, 0), qpt(1, 6), qpt(0, 12)}));
  }

  TEST_CASE("negative curve flag on the quartic") {
    SurfaceModel m = fixtures::quartic();
    DivisorClass d({3, 3, 2});  // ample, so every negative curve is admissible
    Flag flag{DivisorClass({1, 0, 0})};

    ChamberWalk walk = chamber_walk(m, d, flag);
    CHECK(walk.mu == Rational(3));
    REQUIRE(walk.segments.size() == 2);
    CHECK(walk.segments[0].t_hi == Rational(1));
    CHECK(walk.segments[0].support.empty());
    CHECK(walk.segments[1].support ==
          CurveSubset({1}));  // the {L2} chamber

    auto [alpha, beta] = alpha_beta_at(m, d, flag, Rational(1));
    CHECK(alpha == Rational(0));
    CHECK(beta == Rational(3));

    RationalPolygon body = okounkov_polygon(m, d, flag);
    CHECK(body == RationalPolygon::from_points({qpt(0, 0), qpt(3, 0), qpt(3, 6),
                                                qpt(1, 3), qpt(0, 1)}));
    CHECK(2 * body.area() == volume(m, d));  // 22
  }

  TEST_CASE("known bodies on dp6") {
    SurfaceModel m = fixtures::del_pezzo_six();
    DivisorClass k({3, -1, -1, -1});

    // Anticanonical class along the line class H: two chambers.
    ChamberWalk walk = chamber_walk(m, k, Flag{DivisorClass({1, 0, 0, 0})});
    CHECK(walk.mu == make_rational(3, 2));
    REQUIRE(walk.segments.size() == 2);
    CHECK(walk.segments[0].support.empty());
    CHECK(walk.segments[0].t_hi == Rational(1));
    CHECK(walk.segments[1].support ==
          CurveSubset({3, 4, 5}));  // all three lines
    RationalPolygon body = okounkov_polygon(m, k, Flag{DivisorClass({1, 0, 0, 0})});
    CHECK(body == RationalPolygon::from_points(
                      {qpt(0, 0), qpt(make_rational(3, 2), 0), qpt(1, 2), qpt(0, 3)}));
    CHECK(body.area() == Rational(3));

    // Same class along the exceptional curve E1: a pentagon.
    RationalPolygon e1 = okounkov_polygon(m, k, Flag{DivisorClass({0, 1, 0, 0})});
    CHECK(e1 == RationalPolygon::from_points(
                    {qpt(0, 0), qpt(2, 0), qpt(2, 1), qpt(1, 2), qpt(0, 1)}));
    ChamberWalk e1_walk = chamber_walk(m, k, Flag{DivisorClass({0, 1, 0, 0})});
    REQUIRE(e1_walk.segments.size() == 2);
    CHECK(e1_walk.segments[1].support ==
          CurveSubset({3, 4}));  // lines through E1

    // -K + E1 along the anticanonical flag: one chamber, support {E1}.
    DivisorClass d({3, 0, -1, -1});
    ChamberWalk dw = chamber_walk(m, d, Flag{k});
    CHECK(dw.mu == Rational(1));
    REQUIRE(dw.segments.size() == 1);
    CHECK(dw.segments[0].support == CurveSubset({0}));
    CHECK(okounkov_polygon(m, d, Flag{k}) ==
          RationalPolygon::from_points({qpt(0, 0), qpt(1, 0), qpt(0, 7)}));
  }

  TEST_CASE("walks are consistent with direct decompositions") {
    for (const char* name : {"quartic", "dp6"}) {
      SurfaceModel m = fixtures::by_name(name);
      Flag ample{ample_class(m)};
      auto rng = seeded(81);
      for (int iter = 0; iter < 15; ++iter) {
        DivisorClass d = random_pseudoeffective(rng, m);
        if (!is_big(m, d)) d += ample.curve;  // push boundary draws inside
        check_walk(m, d, ample);
        // Negative-curve flags, where admissible.
        DivisorClass p = decompose(m, d).positive;
        for (int c = 0; c < static_cast<int>(m.negative_curves.size()); ++c)
          if (intersect(m, p, m.curve(c)) != 0) check_walk(m, d, Flag{m.curve(c)});
      }
    }
  }

  TEST_CASE("body scales linearly with the class") {
    for (const char* name : {"quartic", "dp6"}) {
      SurfaceModel m = fixtures::by_name(name);
      Flag flag{ample_class(m)};
      auto rng = seeded(82);
      for (int iter = 0; iter < 10; ++iter) {
        DivisorClass d = random_pseudoeffective(rng, m);
        if (!is_big(m, d)) d += flag.curve;
        RationalPolygon one = okounkov_polygon(m, d, flag);
        for (long k : {2L, 3L}) {
          RationalPolygon many = okounkov_polygon(m, Rational(k) * d, flag);
          CHECK(many == scale(one, Rational(k)));
        }
      }
    }
  }

  TEST_CASE("superadditivity under class addition") {
    for (const char* name : {"quartic", "dp6"}) {
      SurfaceModel m = fixtures::by_name(name);
      Flag flag{ample_class(m)};
      auto rng = seeded(83);
      for (int iter = 0; iter < 12; ++iter) {
        DivisorClass d1 = random_pseudoeffective(rng, m);
        DivisorClass d2 = random_pseudoeffective(rng, m);
        if (!is_big(m, d1)) d1 += flag.curve;
        if (!is_big(m, d2)) d2 += flag.curve;
        RationalPolygon sum =
            minkowski_sum(okounkov_polygon(m, d1, flag), okounkov_polygon(m, d2, flag));
        CHECK(contains(okounkov_polygon(m, d1 + d2, flag), sum));
      }
    }
  }

  TEST_CASE("superadditivity is tight for a nef summand pair") {
    SurfaceModel m = fixtures::quartic();
    Flag flag{DivisorClass({2, 2, 1})};
    RationalPolygon left = okounkov_polygon(m, DivisorClass({2, 2, 1}), flag);
    RationalPolygon ray = nef_class_polygon(m, DivisorClass({1, 0, 1}), flag);
    CHECK(ray == RationalPolygon::segment({0, 0}, {0, 6}));
    CHECK(minkowski_sum(left, ray) ==
          okounkov_polygon(m, DivisorClass({3, 2, 2}), flag));
  }

  TEST_CASE("nef class polygon degenerate cases") {
    SurfaceModel m = fixtures::quartic();
    Flag flag{DivisorClass({2, 2, 1})};
    CHECK(nef_class_polygon(m, DivisorClass::zero(3), flag) ==
          RationalPolygon::point({0, 0}));
    CHECK(nef_class_polygon(m, DivisorClass({1, 0, 1}), flag).dimension() == 1);
    CHECK(nef_class_polygon(m, DivisorClass({2, 2, 1}), flag) ==
          okounkov_polygon(m, DivisorClass({2, 2, 1}), flag));

    // The flag itself must be big and nef.
    CHECK_THROWS_AS(nef_class_polygon(m, DivisorClass({2, 2, 1}),
                                      Flag{DivisorClass({1, 0, 1})}),
                    PreconditionError);
    CHECK_THROWS_AS(nef_class_polygon(m, DivisorClass({2, 2, 1}),
                                      Flag{DivisorClass({1, 0, 0})}),
                    PreconditionError);
    // And the class must be nef.
    CHECK_THROWS_AS(nef_class_polygon(m, DivisorClass({3, 2, 1}), flag),
                    PreconditionError);
  }

  TEST_CASE("preconditions") {
    SurfaceModel m = fixtures::quartic();
    Flag good{DivisorClass({2, 2, 1})};

    // Not big.
    CHECK_THROWS_AS(okounkov_polygon(m, DivisorClass({1, 0, 1}), good),
                    PreconditionError);
    // Flag curve in the null locus of the positive part.
    CHECK_THROWS_AS(okounkov_polygon(m, DivisorClass({3, 2, 1}),
                                     Flag{DivisorClass({1, 0, 0})}),
                    PreconditionError);
    // Flag neither nef nor a negative curve.
    CHECK_THROWS_AS(okounkov_polygon(m, DivisorClass({2, 2, 1}),
                                     Flag{DivisorClass({1, 1, 0})}),
                    PreconditionError);
    // Zero flag.
    CHECK_THROWS_AS(okounkov_polygon(m, DivisorClass({2, 2, 1}),
                                     Flag{DivisorClass::zero(3)}),
                    PreconditionError);
    // Parameter outside the domain.
    CHECK_THROWS_AS(alpha_beta_at(m, DivisorClass({2, 2, 1}), good, Rational(2)),
                    PreconditionError);
    CHECK_THROWS_AS(alpha_beta_at(m, DivisorClass({2, 2, 1}), good, Rational(-1)),
                    PreconditionError);
  }
}
