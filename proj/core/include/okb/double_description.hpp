#pragma once

#include <vector>

#include "okb/linalg.hpp"

namespace okb {

// Scales a nonzero rational vector to the primitive integer vector on the
// same ray (coprime integer entries, first nonzero entry keeps its sign...
// the positive multiple is used, so orientation is preserved).
QVec primitive_ray(const QVec& v);

// Extremal rays of the polyhedral cone {x : a x >= 0}, computed by the
// incremental double description method with the rank-based adjacency test.
// Requires rank(a) = dim (equivalently, the cone is pointed); throws
// PreconditionError otherwise.  Rays come back primitive and lex-sorted.
std::vector<QVec> rays_from_inequalities(const QMat& a);

// Inward facet normals of the full-dimensional cone spanned by `generators`
// (facets {x : n.x >= 0}), obtained as the extremal rays of the dual cone.
// Requires the generators to span the ambient space; throws
// PreconditionError otherwise.  Normals come back primitive and lex-sorted.
std::vector<QVec> facets_from_generators(const std::vector<QVec>& generators);

}  // namespace okb
