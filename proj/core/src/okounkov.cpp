#include "okb/okounkov.hpp"

#include <optional>

#include "okb/cones.hpp"
#include "okb/errors.hpp"

namespace okb {

namespace {

Rational lerp(const Rational& t, const Rational& t0, const Rational& t1,
              const Rational& v0, const Rational& v1) {
  if (t0 == t1) return v0;
  return v0 + (t - t0) * (v1 - v0) / (t1 - t0);
}

}  // namespace

Rational WalkSegment::alpha_at(const Rational& t) const {
  return lerp(t, t_lo, t_hi, alpha_lo, alpha_hi);
}

Rational WalkSegment::beta_at(const Rational& t) const {
  return lerp(t, t_lo, t_hi, beta_lo, beta_hi);
}

namespace {

// Affine family of Zariski decompositions sharing one support:
// coefficients a(t) = u + t*v on the support, P(t) = p0 + t*p1.
struct AffineDecomposition {
  CurveSubset support;
  QVec u, v;
  DivisorClass p0, p1;

  Rational coefficient_at(int curve, const Rational& t) const {
    for (size_t k = 0; k < support.indices().size(); ++k)
      if (support.indices()[k] == curve) return u[k] + t * v[k];
    return 0;
  }
};

AffineDecomposition affine_on_support(const SurfaceModel& m, const DivisorClass& d,
                                      const DivisorClass& c, const CurveSubset& support) {
  AffineDecomposition aff;
  aff.support = support;
  aff.p0 = d;
  aff.p1 = -c;
  if (support.empty()) return aff;

  QMat gram = curve_gram(m, support);
  QVec rhs_u, rhs_v;
  for (int i : support.indices()) {
    rhs_u.push_back(intersect(m, d, m.curve(i)));
    rhs_v.push_back(-intersect(m, c, m.curve(i)));
  }
  std::optional<QVec> u = solve_square(gram, std::move(rhs_u));
  std::optional<QVec> v = solve_square(std::move(gram), std::move(rhs_v));
  if (!u || !v) throw InternalError("singular Gram matrix on a chamber support");
  aff.u = std::move(*u);
  aff.v = std::move(*v);
  for (size_t k = 0; k < aff.u.size(); ++k) {
    const DivisorClass& curve = m.curve(support.indices()[k]);
    aff.p0 -= aff.u[k] * curve;
    aff.p1 -= aff.v[k] * curve;
  }
  return aff;
}

// Largest interval around a valid parameter on which the affine family stays
// a genuine decomposition: support coefficients >= 0 and P(t) nonnegative
// against every effective generator.
std::pair<Rational, Rational> validity_window(const SurfaceModel& m,
                                              const AffineDecomposition& aff,
                                              const Rational& mu) {
  Rational lo = 0, hi = mu;
  std::optional<bool> infeasible;
  auto constrain = [&](const Rational& c0, const Rational& c1) {
    // c0 + c1*t >= 0
    if (sign(c1) == 0) {
      if (sign(c0) < 0) infeasible = true;
      return;
    }
    Rational bound = -c0 / c1;
    if (sign(c1) > 0)
      lo = std::max(lo, bound);
    else
      hi = std::min(hi, bound);
  };
  for (size_t k = 0; k < aff.u.size(); ++k) constrain(aff.u[k], aff.v[k]);
  for (const NamedClass& g : m.effective_generators)
    constrain(intersect(m, aff.p0, g.cls), intersect(m, aff.p1, g.cls));
  if (infeasible) throw InternalError("chamber walk window collapsed");
  return {lo, hi};
}

int negative_curve_flag_index(const SurfaceModel& m, const Flag& flag) {
  return m.find_negative_curve(flag.curve);
}

void require_admissible(const SurfaceModel& m, const DivisorClass& d, const Flag& flag,
                        int flag_index) {
  if (flag.curve.is_zero()) throw PreconditionError("flag curve is the zero class");
  if (!is_big(m, d)) throw PreconditionError("chamber walk requires a big class");
  if (flag_index >= 0) {
    DivisorClass p = decompose(m, d).positive;
    if (intersect(m, p, flag.curve) == 0)
      throw PreconditionError(
          "flag curve lies in the null locus of the positive part; the walk degenerates");
  } else if (!is_nef(m, flag.curve)) {
    throw PreconditionError(
        "flag curve must be nef or one of the model's negative curves");
  }
}

}  // namespace

ChamberWalk chamber_walk(const SurfaceModel& m, const DivisorClass& d, const Flag& flag) {
  int flag_index = negative_curve_flag_index(m, flag);
  require_admissible(m, d, flag, flag_index);

  ChamberWalk walk;
  walk.mu = mu_max(m, d, flag.curve);
  walk.a = flag_index >= 0 ? decompose(m, d).coefficient(flag_index) : Rational(0);
  if (walk.a >= walk.mu)
    throw InternalError("walk domain is empty for a big class");

  Rational t0 = walk.a;
  while (t0 < walk.mu) {
    // Probe below `upper`; if the probed support is not yet valid at t0
    // there is a breakpoint in between, so tighten and probe again.  Each
    // retry lands in a different chamber, hence termination.
    Rational upper = walk.mu;
    while (true) {
      Rational probe = (t0 + upper) / 2;
      ZariskiDecomposition z = decompose(m, d - probe * flag.curve);
      AffineDecomposition aff = affine_on_support(m, d, flag.curve, z.support);
      auto [lo, hi] = validity_window(m, aff, walk.mu);
      if (lo > probe || hi < probe)
        throw InternalError("validity window does not contain its probe");
      if (lo > t0) {
        upper = lo;
        continue;
      }
      WalkSegment seg;
      seg.t_lo = t0;
      seg.t_hi = hi;
      seg.support = aff.support;
      auto boundary = [&](const Rational& t, Rational* alpha, Rational* beta) {
        *alpha = flag_index >= 0 ? aff.coefficient_at(flag_index, t) : Rational(0);
        *beta = *alpha + intersect(m, aff.p0 + t * aff.p1, flag.curve);
      };
      boundary(seg.t_lo, &seg.alpha_lo, &seg.beta_lo);
      boundary(seg.t_hi, &seg.alpha_hi, &seg.beta_hi);
      walk.segments.push_back(std::move(seg));
      t0 = hi;
      break;
    }
  }
  return walk;
}

RationalPolygon okounkov_polygon(const SurfaceModel& m, const DivisorClass& d,
                                 const Flag& flag) {
  ChamberWalk walk = chamber_walk(m, d, flag);
  std::vector<Point2> boundary;
  for (const WalkSegment& seg : walk.segments) {
    boundary.push_back({seg.t_lo, seg.alpha_lo});
    boundary.push_back({seg.t_lo, seg.beta_lo});
    boundary.push_back({seg.t_hi, seg.alpha_hi});
    boundary.push_back({seg.t_hi, seg.beta_hi});
  }
  return RationalPolygon::from_points(std::move(boundary));
}

std::pair<Rational, Rational> alpha_beta_at(const SurfaceModel& m, const DivisorClass& d,
                                            const Flag& flag, const Rational& t) {
  ChamberWalk walk = chamber_walk(m, d, flag);
  if (t < walk.a || t > walk.mu)
    throw PreconditionError("parameter outside the walk domain [a, mu]");
  std::optional<std::pair<Rational, Rational>> value;
  for (const WalkSegment& seg : walk.segments) {
    if (t < seg.t_lo || t > seg.t_hi) continue;
    std::pair<Rational, Rational> here{seg.alpha_at(t), seg.beta_at(t)};
    if (value && *value != here)
      throw InternalError("boundary functions disagree across a breakpoint");
    value = here;
  }
  if (!value) throw InternalError("walk segments do not cover the domain");
  return *value;
}

RationalPolygon nef_class_polygon(const SurfaceModel& m, const DivisorClass& d,
                                  const Flag& flag) {
  if (!is_nef(m, flag.curve) || !is_big(m, flag.curve))
    throw PreconditionError("nef_class_polygon requires a big and nef flag curve");
  if (!is_nef(m, d)) throw PreconditionError("nef_class_polygon requires a nef class");
  if (d.is_zero()) return RationalPolygon::point({0, 0});
  if (is_big(m, d)) return okounkov_polygon(m, d, flag);
  // Nef but not big: mu = 0, so the body is the vertical fiber over t = 0.
  return RationalPolygon::from_points({{0, 0}, {0, intersect(m, d, flag.curve)}});
}

}  // namespace okb
