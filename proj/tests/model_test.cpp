#include "doctest.h"
#include "okb/errors.hpp"
#include "okb/fixtures.hpp"
#include "okb/surface_model.hpp"
#include "oracles.hpp"

using namespace okb;
using namespace okb::testing;

TEST_SUITE("model") {
  TEST_CASE("fixtures validate") {
    CHECK(validate(fixtures::quartic()).ok());
    CHECK(validate(fixtures::del_pezzo_six()).ok());
    CHECK_NOTHROW(require_valid(fixtures::quartic()));
    CHECK(fixtures::by_name("quartic").name == "quartic");
    CHECK(fixtures::by_name("dp6").name == "dp6");
    CHECK_THROWS_AS(fixtures::by_name("nope"), PreconditionError);
  }

  TEST_CASE("quartic intersection numbers match the defining matrix") {
    SurfaceModel m = fixtures::quartic();
    DivisorClass L1 = m.curve(0), L2 = m.curve(1), C = m.curve(2);
    CHECK(intersect(m, L1, L1) == Rational(-2));
    CHECK(intersect(m, L1, L2) == Rational(1));
    CHECK(intersect(m, L1, C) == Rational(2));
    CHECK(intersect(m, C, C) == Rational(-2));
    DivisorClass d = C + Rational(2) * L1 + Rational(2) * L2;
    CHECK(d.coords() == QVec{2, 2, 1});
    CHECK(intersect(m, d, L1) == Rational(0));
    CHECK(intersect(m, d, L2) == Rational(0));
    CHECK(intersect(m, d, C) == Rational(6));
    CHECK(self_intersection(m, d) == Rational(6));
  }

  TEST_CASE("intersection form is symmetric and bilinear") {
    for (const char* name : {"quartic", "dp6"}) {
      SurfaceModel m = fixtures::by_name(name);
      auto rng = seeded(21);
      for (int iter = 0; iter < 40; ++iter) {
        DivisorClass a = random_class(rng, m), b = random_class(rng, m),
                     c = random_class(rng, m);
        Rational s = small_rational(rng, 3, 2), t = small_rational(rng, 3, 2);
        CHECK(intersect(m, a, b) == intersect(m, b, a));
        CHECK(intersect(m, s * a + t * b, c) ==
              s * intersect(m, a, c) + t * intersect(m, b, c));
        CHECK(intersect(m, a, b) == dot_gram(m, a.coords(), b.coords()));
      }
    }
  }

  TEST_CASE("is_negative_definite: exhaustive subsets against the oracle") {
    for (const char* name : {"quartic", "dp6"}) {
      SurfaceModel m = fixtures::by_name(name);
      int n = static_cast<int>(m.negative_curves.size());
      for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
          if (mask & (1ull << i)) idx.push_back(i);
        CurveSubset s(idx);
        CHECK(is_negative_definite(m, s) == oracle_negative_definite(subset_gram(m, idx)));
        CHECK(curve_gram(m, s) == subset_gram(m, idx));
      }
    }
  }

  TEST_CASE("negative definiteness is hereditary on fixture subsets") {
    for (const char* name : {"quartic", "dp6"}) {
      SurfaceModel m = fixtures::by_name(name);
      int n = static_cast<int>(m.negative_curves.size());
      for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
          if (mask & (1ull << i)) idx.push_back(i);
        if (!is_negative_definite(m, CurveSubset(idx))) continue;
        for (std::uint64_t sub = mask; sub; sub = (sub - 1) & mask) {
          std::vector<int> sidx;
          for (int i = 0; i < n; ++i)
            if (sub & (1ull << i)) sidx.push_back(i);
          CHECK(is_negative_definite(m, CurveSubset(sidx)));
        }
      }
    }
  }

  TEST_CASE("validate flags specific defects") {
    SurfaceModel m = fixtures::quartic();
    m.gram[0][1] = 5;  // breaks symmetry
    CHECK_FALSE(validate(m).ok());

    SurfaceModel pos = fixtures::quartic();
    pos.gram = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};  // signature (3, 0)
    CHECK_FALSE(validate(pos).ok());
    CHECK_THROWS_AS(require_valid(pos), ModelError);

    SurfaceModel dup = fixtures::quartic();
    dup.basis_labels[1] = dup.basis_labels[0];
    CHECK_FALSE(validate(dup).ok());

    SurfaceModel notneg = fixtures::quartic();
    notneg.negative_curves[0].cls = DivisorClass({1, 1, 1});  // self-intersection 2
    CHECK_FALSE(validate(notneg).ok());

    SurfaceModel missing = fixtures::quartic();
    missing.effective_generators.erase(missing.effective_generators.begin());
    CHECK_FALSE(validate(missing).ok());  // negative curve not among generators
  }

  TEST_CASE("find_negative_curve matches exact coordinates only") {
    SurfaceModel m = fixtures::quartic();
    CHECK(m.find_negative_curve(DivisorClass({1, 0, 0})) == 0);
    CHECK(m.find_negative_curve(DivisorClass({0, 0, 1})) == 2);
    CHECK(m.find_negative_curve(DivisorClass({2, 0, 0})) == -1);  // multiple, not equal
    CHECK(m.find_negative_curve(DivisorClass({1, 1, 0})) == -1);
  }

  TEST_CASE("CurveSubset ordering and labels") {
    CurveSubset a({0, 1}), b({2}), c({0, 2});
    CHECK(b.canonical_less(a));      // smaller cardinality first
    CHECK(a.canonical_less(c));      // then lexicographic
    CHECK(a.to_string({"L1", "L2", "C"}) == "{L1, L2}");
    CHECK(CurveSubset().to_string({}) == "{}");
    CHECK(a.with(2) == CurveSubset({0, 1, 2}));
    CHECK_THROWS_AS(CurveSubset({1, 0}), PreconditionError);
    CHECK_THROWS_AS(CurveSubset({0, 0}), PreconditionError);
  }
}
