#include "okb/minkowski.hpp"

#include <algorithm>
#include <set>

#include "okb/cones.hpp"
#include "okb/errors.hpp"
#include "okb/zariski.hpp"

namespace okb {

CurveSubset null_set(const SurfaceModel& m, const DivisorClass& c) {
  if (!is_nef(m, c)) throw PreconditionError("null_set requires a nef class");
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(m.negative_curves.size()); ++i)
    if (intersect(m, c, m.curve(i)) == 0) idx.push_back(i);
  return CurveSubset(std::move(idx));
}

namespace {

void require_big_nef_flag(const SurfaceModel& m, const DivisorClass& c) {
  if (!is_nef(m, c) || !is_big(m, c))
    throw PreconditionError("flag curve must be big and nef");
}

// Smallest positive integer multiple with integer coordinates.
DivisorClass integral_rescale(const DivisorClass& d) {
  Integer den_lcm = 1;
  for (const Rational& c : d.coords())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  DivisorClass out = d;
  out *= Rational(den_lcm);
  return out;
}

}  // namespace

DivisorClass minkowski_element(const SurfaceModel& m, const Flag& flag,
                               const CurveSubset& chamber) {
  require_big_nef_flag(m, flag.curve);
  if (chamber.empty() || !is_negative_definite(m, chamber))
    throw PreconditionError("chamber must be a nonempty negative-definite curve subset");

  QVec rhs;
  for (int i : chamber.indices()) rhs.push_back(-intersect(m, flag.curve, m.curve(i)));
  std::optional<QVec> a = solve_square(curve_gram(m, chamber), std::move(rhs));
  if (!a) throw InternalError("negative-definite Gram matrix is singular");

  DivisorClass element = flag.curve;
  for (size_t k = 0; k < a->size(); ++k) {
    if (sign((*a)[k]) < 0)
      throw InternalError("chamber element has a negative curve coefficient");
    element += (*a)[k] * m.curve(chamber.indices()[k]);
  }
  return integral_rescale(element);
}

MinkowskiBasis minkowski_basis(const SurfaceModel& m, const Flag& flag) {
  require_big_nef_flag(m, flag.curve);

  MinkowskiBasis basis;
  basis.flag = flag;
  std::set<QVec> seen;
  auto add = [&](DivisorClass cls, MinkowskiBasisElement::Origin origin,
                 CurveSubset chamber) {
    if (!seen.insert(cls.primitive().coords()).second) return;
    MinkowskiBasisElement el;
    el.cls = std::move(cls);
    el.origin = origin;
    el.chamber = std::move(chamber);
    el.polygon = nef_class_polygon(m, el.cls, flag);
    basis.elements.push_back(std::move(el));
  };

  add(integral_rescale(flag.curve), MinkowskiBasisElement::Origin::Flag, CurveSubset());
  for (const DivisorClass& ray : nef_not_big_rays(m))
    add(ray, MinkowskiBasisElement::Origin::NefRay, CurveSubset());
  for (const CurveSubset& chamber : enumerate_chambers(m))
    add(minkowski_element(m, flag, chamber), MinkowskiBasisElement::Origin::Chamber,
        chamber);
  return basis;
}

namespace {

long restricted_chamber_count(const SurfaceModel& m, const std::vector<int>& allowed) {
  // Depth-first over negative-definite subsets of the allowed curves, using
  // heredity exactly as in the unrestricted enumeration.
  long count = 0;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, size_t from) -> void {
    for (size_t k = from; k < allowed.size(); ++k) {
      stack.push_back(allowed[k]);
      if (is_negative_definite(m, CurveSubset(stack))) {
        ++count;
        self(self, k + 1);
      }
      stack.pop_back();
    }
  };
  dfs(dfs, 0);
  return count;
}

}  // namespace

long nz_count(const SurfaceModel& m, const DivisorClass& c) {
  require_big_nef_flag(m, c);
  CurveSubset null = null_set(m, c);
  long meeting = 0;
  for (const CurveSubset& chamber : enumerate_chambers(m))
    for (int i : chamber.indices())
      if (null.contains(i)) {
        ++meeting;
        break;
      }
  return meeting;
}

long null_zar_count(const SurfaceModel& m, const DivisorClass& c) {
  require_big_nef_flag(m, c);
  return restricted_chamber_count(m, null_set(m, c).indices());
}

long reduced_chamber_count(const SurfaceModel& m, const DivisorClass& c) {
  require_big_nef_flag(m, c);
  CurveSubset null = null_set(m, c);
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(m.negative_curves.size()); ++i)
    if (!null.contains(i)) kept.push_back(i);
  return restricted_chamber_count(m, kept);
}

long cardinality_ample(const SurfaceModel& m) {
  return 1 + static_cast<long>(nef_not_big_rays(m).size()) + chamber_count(m);
}

long cardinality_bignef(const SurfaceModel& m, const DivisorClass& c) {
  require_big_nef_flag(m, c);
  if (auto witness = star_witness(m)) {
    auto [i, j] = *witness;
    throw StarViolationError(
        "cardinality formula needs (Ni.Nj)^2 >= Ni^2*Nj^2 for meeting curves; "
        "violated by (" +
            m.curve_label(i) + ", " + m.curve_label(j) + ")",
        i, j);
  }
  return cardinality_ample(m) - nz_count(m, c);
}

long cardinality_upper_bound(const SurfaceModel& m, const DivisorClass& c) {
  require_big_nef_flag(m, c);
  return cardinality_ample(m) - null_zar_count(m, c);
}

MinkowskiDecomposition minkowski_decompose(const SurfaceModel& m, const DivisorClass& d,
                                           const Flag& flag) {
  if (!is_nef(m, d)) throw PreconditionError("minkowski_decompose requires a nef class");
  MinkowskiDecomposition out;
  out.basis = minkowski_basis(m, flag);
  out.polygon = nef_class_polygon(m, d, flag);

  int k = static_cast<int>(out.basis.elements.size());
  int rho = m.rank();
  QMat columns(rho, QVec(k));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < rho; ++i) columns[i][j] = out.basis.elements[j].cls[i];
  int r = rank(columns);

  auto verify = [&](const QVec& alpha) {
    RationalPolygon sum = RationalPolygon::point({0, 0});
    for (int j = 0; j < k; ++j) {
      if (sign(alpha[j]) == 0) continue;
      sum = minkowski_sum(sum, scale(out.basis.elements[j].polygon, alpha[j]));
    }
    return sum == out.polygon;
  };

  // Vertex solutions: every basic feasible solution of {a >= 0 : M a = d}
  // lives on some r columns, so r-subsets in lex order cover them all
  // deterministically.
  std::set<QVec> tried;
  std::vector<int> pick(r);
  auto search = [&](auto&& self, int from, int depth) -> bool {
    if (depth == r) {
      QMat sys(rho, QVec(r));
      for (int j = 0; j < r; ++j)
        for (int i = 0; i < rho; ++i) sys[i][j] = columns[i][pick[j]];
      std::optional<QVec> sol = solve_general(std::move(sys), d.coords());
      if (!sol) return false;
      QVec alpha(k, Rational(0));
      for (int j = 0; j < r; ++j) {
        if (sign((*sol)[j]) < 0) return false;
        alpha[pick[j]] = (*sol)[j];
      }
      if (!tried.insert(alpha).second) return false;
      if (!verify(alpha)) return false;
      out.coefficients = std::move(alpha);
      return true;
    }
    for (int j = from; j <= k - (r - depth); ++j) {
      pick[depth] = j;
      if (self(self, j + 1, depth + 1)) return true;
    }
    return false;
  };
  if (r > 0 && search(search, 0, 0)) return out;
  if (r == 0 && d.is_zero()) {  // degenerate model with no elements at all
    out.coefficients.assign(k, Rational(0));
    return out;
  }
  throw InternalError("no vertex solution reproduces the Okounkov polygon of " +
                      d.to_string());
}

}  // namespace okb
