#pragma once

#include <vector>

#include "okb/divisor.hpp"
#include "okb/surface_model.hpp"

namespace okb {

// Outcome of an exact cone-membership test.  Exactly one of the two
// certificates is populated:
//   inside  -> coefficients: D = sum coefficients[i] * generator[i], all >= 0
//   outside -> functional f: f.g >= 0 (plain dot) for every generator,
//              while f.D < 0.
struct ConeMembership {
  bool inside = false;
  QVec coefficients;
  QVec functional;
};

ConeMembership pseudoeffective_membership(const SurfaceModel& m, const DivisorClass& d);
bool is_pseudoeffective(const SurfaceModel& m, const DivisorClass& d);

// Nef means nonnegative intersection with every effective generator; this is
// the full dual-cone test because the generators span the pseudoeffective
// cone (which contains every curve class).
bool is_nef(const SurfaceModel& m, const DivisorClass& d);

// Big means interior to the pseudoeffective cone: strictly positive against
// every facet.  False whenever the effective cone is lower-dimensional.
bool is_big(const SurfaceModel& m, const DivisorClass& d);

// Generator and facet view of a cone; both lists are primitive and
// lex-sorted, and moving either way between them is the identity on cones.
struct ConeDescription {
  std::vector<DivisorClass> extremal_rays;
  std::vector<QVec> facet_normals;  // inward: cone = {x : n.x >= 0 for all n}
};

// Requires the effective cone to be full-dimensional and pointed (both hold
// for models of actual surfaces); throws ModelError otherwise.
ConeDescription effective_cone(const SurfaceModel& m);
ConeDescription nef_cone(const SurfaceModel& m);

// Primitive extremal rays of the nef cone with self-intersection zero:
// the nef-but-not-big directions.
std::vector<DivisorClass> nef_not_big_rays(const SurfaceModel& m);

// max { t >= 0 : d - t*c pseudoeffective }.
// pre: d pseudoeffective, c pseudoeffective and nonzero.
Rational mu_max(const SurfaceModel& m, const DivisorClass& d, const DivisorClass& c);

}  // namespace okb
