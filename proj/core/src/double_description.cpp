#include "okb/double_description.hpp"

#include <algorithm>
#include <set>

#include "okb/errors.hpp"

namespace okb {

QVec primitive_ray(const QVec& v) {
  Integer den_lcm = 1;
  for (const Rational& c : v)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const Rational& c : v) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) throw PreconditionError("primitive_ray: zero vector");
  Rational f = make_rational(den_lcm, num_gcd);
  QVec out = v;
  for (Rational& c : out) c *= f;
  return out;
}

namespace {

// Extremal rays r1, r2 of a pointed cone are adjacent iff the inequalities
// active at both span a space of dimension dim-2 (the minimal face holding
// both rays is two-dimensional).
bool adjacent(const QMat& a, const std::vector<int>& processed, const QVec& r1,
              const QVec& r2, int dim) {
  QMat active;
  for (int row : processed)
    if (dot(a[row], r1) == 0 && dot(a[row], r2) == 0) active.push_back(a[row]);
  return rank(std::move(active)) == dim - 2;
}

}  // namespace

std::vector<QVec> rays_from_inequalities(const QMat& a) {
  int m = static_cast<int>(a.size());
  int dim = m == 0 ? 0 : static_cast<int>(a[0].size());
  if (dim == 0) throw PreconditionError("rays_from_inequalities: empty system");

  // Greedily pick dim independent rows for the simplicial start cone.
  std::vector<int> start;
  QMat picked;
  for (int i = 0; i < m && static_cast<int>(start.size()) < dim; ++i) {
    picked.push_back(a[i]);
    if (rank(picked) == static_cast<int>(picked.size()))
      start.push_back(i);
    else
      picked.pop_back();
  }
  if (static_cast<int>(start.size()) < dim)
    throw PreconditionError("rays_from_inequalities: cone is not pointed");

  // Rays of {a0 x >= 0} for invertible a0: the columns of a0^{-1}.
  std::vector<QVec> rays;
  for (int j = 0; j < dim; ++j) {
    QVec e(dim, Rational(0));
    e[j] = 1;
    QMat a0;
    for (int i : start) a0.push_back(a[i]);
    rays.push_back(primitive_ray(*solve_square(std::move(a0), std::move(e))));
  }

  std::vector<int> processed = start;
  for (int row = 0; row < m; ++row) {
    if (std::find(start.begin(), start.end(), row) != start.end()) continue;
    std::vector<QVec> plus, zero, minus;
    for (QVec& r : rays) {
      int s = sign(dot(a[row], r));
      (s > 0 ? plus : s == 0 ? zero : minus).push_back(std::move(r));
    }
    std::vector<QVec> next;
    for (const QVec& p : plus)
      for (const QVec& q : minus) {
        if (!adjacent(a, processed, p, q, dim)) continue;
        Rational wp = dot(a[row], p), wq = dot(a[row], q);
        QVec fresh(dim);
        for (int k = 0; k < dim; ++k) fresh[k] = wp * q[k] - wq * p[k];
        next.push_back(primitive_ray(fresh));
      }
    for (QVec& r : plus) next.push_back(std::move(r));
    for (QVec& r : zero) next.push_back(std::move(r));
    rays = std::move(next);
    processed.push_back(row);
  }

  std::set<QVec> dedup(rays.begin(), rays.end());
  return {dedup.begin(), dedup.end()};
}

std::vector<QVec> facets_from_generators(const std::vector<QVec>& generators) {
  QMat a;
  for (const QVec& g : generators) a.push_back(g);
  if (a.empty()) throw PreconditionError("facets_from_generators: no generators");
  if (rank(a) != static_cast<int>(a[0].size()))
    throw PreconditionError("facets_from_generators: generators do not span");
  return rays_from_inequalities(a);
}

}  // namespace okb
