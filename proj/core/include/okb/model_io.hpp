#pragma once

#include <string>

#include "okb/surface_model.hpp"

namespace okb {

// Parse a surface-model file (JSON, rationals as "a/b" strings; bare JSON
// integers are also accepted on input).  Syntax errors carry
// "origin:line:column"; schema errors carry the offending key path.
// Neither variant validates the model beyond its shape.
SurfaceModel parse_model(const std::string& text, const std::string& origin);
SurfaceModel load_model_unchecked(const std::string& path);

// load_model_unchecked followed by require_valid.
SurfaceModel load_model(const std::string& path);

// Canonical serialization: fixed key order, rationals as strings, two-space
// indent, trailing newline.  parse_model(model_to_json(m)) round-trips.
std::string model_to_json(const SurfaceModel& m);

// A divisor class written either as comma-separated coordinates
// ("2,2,1", "(1/2, 0, -3)") or as a signed combination of the model's
// labels ("C+2L1+2L2", "3/2*H - E1").  Labels come from the basis, the
// negative curves, and the effective generators.
DivisorClass parse_class_expression(const SurfaceModel& m, const std::string& text);

}  // namespace okb
