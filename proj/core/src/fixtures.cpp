#include "okb/fixtures.hpp"

#include "okb/errors.hpp"

namespace okb {
namespace fixtures {

namespace {

DivisorClass cls(std::vector<int> v) {
  QVec q;
  q.reserve(v.size());
  for (int c : v) q.emplace_back(c);
  return DivisorClass(std::move(q));
}

}  // namespace

SurfaceModel quartic() {
  SurfaceModel m;
  m.name = "quartic";
  m.basis_labels = {"L1", "L2", "C"};
  m.gram = {{Rational(-2), Rational(1), Rational(2)},
            {Rational(1), Rational(-2), Rational(2)},
            {Rational(2), Rational(2), Rational(-2)}};
  m.negative_curves = {{"L1", cls({1, 0, 0})},
                       {"L2", cls({0, 1, 0})},
                       {"C", cls({0, 0, 1})}};
  m.effective_generators = m.negative_curves;
  return m;
}

SurfaceModel del_pezzo_six() {
  SurfaceModel m;
  m.name = "dp6";
  m.basis_labels = {"H", "E1", "E2", "E3"};
  m.gram = {{Rational(1), Rational(0), Rational(0), Rational(0)},
            {Rational(0), Rational(-1), Rational(0), Rational(0)},
            {Rational(0), Rational(0), Rational(-1), Rational(0)},
            {Rational(0), Rational(0), Rational(0), Rational(-1)}};
  m.negative_curves = {{"E1", cls({0, 1, 0, 0})},
                       {"E2", cls({0, 0, 1, 0})},
                       {"E3", cls({0, 0, 0, 1})},
                       {"L12", cls({1, -1, -1, 0})},
                       {"L13", cls({1, -1, 0, -1})},
                       {"L23", cls({1, 0, -1, -1})}};
  m.effective_generators = m.negative_curves;
  return m;
}

SurfaceModel by_name(const std::string& name) {
  if (name == "quartic") return quartic();
  if (name == "dp6") return del_pezzo_six();
  throw PreconditionError("unknown fixture '" + name + "' (expected quartic or dp6)");
}

}  // namespace fixtures
}  // namespace okb
