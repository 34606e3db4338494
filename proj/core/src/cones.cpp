#include "okb/cones.hpp"

#include <algorithm>

#include "okb/double_description.hpp"
#include "okb/errors.hpp"
#include "okb/simplex.hpp"

namespace okb {

namespace {

// Columns = effective generators; the systems below all constrain
// sum(lambda_i * E_i) [+ t*c] = d with nonnegative variables.
QMat generator_columns(const SurfaceModel& m) {
  int rho = m.rank();
  QMat a(rho, QVec(m.effective_generators.size()));
  for (size_t j = 0; j < m.effective_generators.size(); ++j) {
    const DivisorClass& g = m.effective_generators[j].cls;
    if (g.rank() != rho) throw ModelError("effective generator rank mismatch");
    for (int i = 0; i < rho; ++i) a[i][j] = g[i];
  }
  return a;
}

std::vector<QVec> generator_rows(const SurfaceModel& m) {
  std::vector<QVec> rows;
  rows.reserve(m.effective_generators.size());
  for (const NamedClass& g : m.effective_generators) rows.push_back(g.cls.coords());
  return rows;
}

}  // namespace

ConeMembership pseudoeffective_membership(const SurfaceModel& m, const DivisorClass& d) {
  if (d.rank() != m.rank()) throw PreconditionError("class rank does not match model");
  QMat a = generator_columns(m);
  QVec c(m.effective_generators.size(), Rational(0));
  LpResult lp = lp_maximize(a, d.coords(), c);
  ConeMembership out;
  if (lp.status == LpResult::Status::Optimal) {
    out.inside = true;
    out.coefficients = std::move(lp.x);
  } else {
    out.inside = false;
    out.functional = std::move(lp.farkas);
  }
  return out;
}

bool is_pseudoeffective(const SurfaceModel& m, const DivisorClass& d) {
  return pseudoeffective_membership(m, d).inside;
}

bool is_nef(const SurfaceModel& m, const DivisorClass& d) {
  for (const NamedClass& g : m.effective_generators)
    if (sign(intersect(m, d, g.cls)) < 0) return false;
  return true;
}

bool is_big(const SurfaceModel& m, const DivisorClass& d) {
  if (d.rank() != m.rank()) throw PreconditionError("class rank does not match model");
  std::vector<QVec> rows = generator_rows(m);
  QMat rows_copy = rows;
  if (rank(std::move(rows_copy)) != m.rank()) return false;  // no interior at all
  for (const QVec& f : facets_from_generators(rows))
    if (sign(dot(f, d.coords())) <= 0) return false;
  return true;
}

ConeDescription effective_cone(const SurfaceModel& m) {
  std::vector<QVec> rows = generator_rows(m);
  ConeDescription out;
  try {
    out.facet_normals = facets_from_generators(rows);
    for (QVec& ray : rays_from_inequalities(out.facet_normals))
      out.extremal_rays.emplace_back(std::move(ray));
  } catch (const PreconditionError& e) {
    throw ModelError(std::string("effective cone is degenerate: ") + e.what());
  }
  return out;
}

ConeDescription nef_cone(const SurfaceModel& m) {
  // Inequalities: intersection with each effective generator, i.e. rows
  // gram * E_j expressed as plain dot products.
  QMat ineq;
  for (const NamedClass& g : m.effective_generators)
    ineq.push_back(mat_vec(m.gram, g.cls.coords()));
  ConeDescription out;
  try {
    std::vector<QVec> rays = rays_from_inequalities(ineq);
    std::vector<QVec> ray_rows = rays;
    for (QVec& ray : rays) out.extremal_rays.emplace_back(std::move(ray));
    out.facet_normals = facets_from_generators(ray_rows);
  } catch (const PreconditionError& e) {
    throw ModelError(std::string("nef cone is degenerate: ") + e.what());
  }
  return out;
}

std::vector<DivisorClass> nef_not_big_rays(const SurfaceModel& m) {
  std::vector<DivisorClass> out;
  for (const DivisorClass& ray : nef_cone(m).extremal_rays)
    if (self_intersection(m, ray) == 0) out.push_back(ray);
  return out;
}

Rational mu_max(const SurfaceModel& m, const DivisorClass& d, const DivisorClass& c) {
  if (c.is_zero() || !is_pseudoeffective(m, c))
    throw PreconditionError("mu_max: direction class must be pseudoeffective and nonzero");
  QMat a = generator_columns(m);
  size_t cols = m.effective_generators.size();
  for (int i = 0; i < m.rank(); ++i) a[i].push_back(c[i]);
  QVec objective(cols + 1, Rational(0));
  objective[cols] = 1;
  LpResult lp = lp_maximize(a, d.coords(), objective);
  if (lp.status == LpResult::Status::Infeasible)
    throw PreconditionError("mu_max: class is not pseudoeffective");
  if (lp.status == LpResult::Status::Unbounded)
    throw ModelError("mu_max unbounded: pseudoeffective cone is not pointed");
  return lp.objective;
}

}  // namespace okb
