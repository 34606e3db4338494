#include "doctest.h"
#include "okb/double_description.hpp"
#include "okb/errors.hpp"
#include "okb/simplex.hpp"
#include "oracles.hpp"

using namespace okb;
using namespace okb::testing;

namespace {

QMat random_pointed_system(std::mt19937_64& rng, std::size_t dim) {
  while (true) {
    std::size_t rows = dim + pick(rng, 4);
    QMat a(rows, QVec(dim));
    for (auto& row : a)
      for (auto& v : row) v = Rational(pick(rng, 7) - 3);
    if (gauss_rank(a) == static_cast<int>(dim)) return a;
  }
}

// membership in cone(rays) decided by LP feasibility
bool in_ray_span(const std::vector<QVec>& rays, const QVec& x) {
  if (rays.empty()) {
    for (const Rational& v : x)
      if (sign(v) != 0) return false;
    return true;
  }
  std::size_t dim = x.size();
  QMat a(dim, QVec(rays.size()));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rays.size(); ++j) a[i][j] = rays[j][i];
  LpResult r = lp_maximize(a, x, QVec(rays.size(), Rational(0)));
  return r.status == LpResult::Status::Optimal;
}

}  // namespace

TEST_SUITE("double_description") {
  TEST_CASE("primitive_ray normalizes and keeps orientation") {
    CHECK(primitive_ray({make_rational(1, 2), make_rational(1, 3)}) == QVec{3, 2});
    CHECK(primitive_ray({-2, 4}) == QVec{-1, 2});
    CHECK(primitive_ray({0, make_rational(-5, 7)}) == QVec{0, -1});
    CHECK_THROWS_AS(primitive_ray({0, 0}), PreconditionError);
  }

  TEST_CASE("first quadrant") {
    std::vector<QVec> rays = rays_from_inequalities({{1, 0}, {0, 1}});
    REQUIRE(rays.size() == 2);
    CHECK(rays[0] == QVec{0, 1});
    CHECK(rays[1] == QVec{1, 0});
  }

  TEST_CASE("non-pointed systems are refused") {
    CHECK_THROWS_AS(rays_from_inequalities({{1, 0}}), PreconditionError);
    CHECK_THROWS_AS(rays_from_inequalities({{1, 1}, {2, 2}, {-1, -1}}), PreconditionError);
    CHECK_THROWS_AS(facets_from_generators({{1, 0, 0}, {0, 1, 0}}), PreconditionError);
  }

  TEST_CASE("random pointed cones match the brute-force ray oracle") {
    auto rng = seeded(41);
    for (int iter = 0; iter < 60; ++iter) {
      std::size_t dim = 2 + pick(rng, 3);  // 2..4
      QMat a = random_pointed_system(rng, dim);
      std::vector<QVec> got = rays_from_inequalities(a);
      std::vector<QVec> want = oracle_rays(a);
      CHECK(got == want);
    }
  }

  TEST_CASE("generator/facet round trip") {
    auto rng = seeded(42);
    int full_dim_cases = 0;
    for (int iter = 0; iter < 40; ++iter) {
      std::size_t dim = 2 + pick(rng, 2);  // 2..3
      QMat a = random_pointed_system(rng, dim);
      std::vector<QVec> rays = rays_from_inequalities(a);
      if (gauss_rank(QMat(rays.begin(), rays.end())) != static_cast<int>(dim))
        continue;  // facet view needs a full-dimensional cone
      ++full_dim_cases;
      std::vector<QVec> facets = facets_from_generators(rays);
      // every ray satisfies every facet
      for (const QVec& r : rays)
        for (const QVec& f : facets) {
          Rational d(0);
          for (std::size_t k = 0; k < dim; ++k) d += r[k] * f[k];
          CHECK(sign(d) >= 0);
        }
      // and the facet system reproduces exactly the same rays
      CHECK(rays_from_inequalities(QMat(facets.begin(), facets.end())) == rays);
    }
    CHECK(full_dim_cases > 5);
  }

  TEST_CASE("inequality view and generator view agree on membership") {
    auto rng = seeded(43);
    for (int iter = 0; iter < 25; ++iter) {
      std::size_t dim = 2 + pick(rng, 2);
      QMat a = random_pointed_system(rng, dim);
      std::vector<QVec> rays = rays_from_inequalities(a);
      for (int probe = 0; probe < 12; ++probe) {
        QVec x;
        for (std::size_t k = 0; k < dim; ++k) x.push_back(small_rational(rng, 3, 2));
        bool by_ineq = true;
        for (const QVec& row : a) {
          Rational d(0);
          for (std::size_t k = 0; k < dim; ++k) d += row[k] * x[k];
          by_ineq = by_ineq && sign(d) >= 0;
        }
        CHECK(by_ineq == in_ray_span(rays, x));
      }
    }
  }
}
