#pragma once

#include "okb/surface_model.hpp"

namespace okb {
namespace fixtures {

// Quartic surface containing two lines L1, L2 and a conic C whose classes
// span the lattice.  The three curves are the only negative curves and also
// generate the effective cone.  Intersection matrix in the basis (L1, L2, C):
//
//        L1  L2   C
//   L1 [ -2   1   2 ]
//   L2 [  1  -2   2 ]
//   C  [  2   2  -2 ]
SurfaceModel quartic();

// Del Pezzo surface of degree 6: the plane blown up in three general points.
// Basis (H, E1, E2, E3) with H^2 = 1, Ei^2 = -1, everything else orthogonal.
// Negative curves: the exceptional curves E1, E2, E3 and the strict
// transforms Lij = H - Ei - Ej of the lines through pairs of points.
SurfaceModel del_pezzo_six();

// Lookup by name ("quartic" or "dp6"); throws PreconditionError otherwise.
SurfaceModel by_name(const std::string& name);

}  // namespace fixtures
}  // namespace okb
