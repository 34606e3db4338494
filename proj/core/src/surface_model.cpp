#include "okb/surface_model.hpp"

#include <map>
#include <set>

#include "okb/errors.hpp"

namespace okb {

DivisorClass SurfaceModel::basis_class(int i) const {
  DivisorClass e = DivisorClass::zero(rank());
  e[i] = 1;
  return e;
}

int SurfaceModel::find_negative_curve(const DivisorClass& cls) const {
  for (size_t i = 0; i < negative_curves.size(); ++i)
    if (negative_curves[i].cls == cls) return static_cast<int>(i);
  return -1;
}

Rational intersect(const SurfaceModel& m, const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != m.rank() || b.rank() != m.rank())
    throw PreconditionError("intersect: class rank does not match model");
  return dot(a.coords(), mat_vec(m.gram, b.coords()));
}

Rational self_intersection(const SurfaceModel& m, const DivisorClass& a) {
  return intersect(m, a, a);
}

QMat curve_gram(const SurfaceModel& m, const CurveSubset& curves) {
  int n = curves.size();
  QMat g(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      g[i][j] = g[j][i] = intersect(m, m.curve(curves.indices()[i]), m.curve(curves.indices()[j]));
  return g;
}

bool is_negative_definite(const SurfaceModel& m, const CurveSubset& curves) {
  for (int i : curves.indices())
    if (i < 0 || i >= static_cast<int>(m.negative_curves.size()))
      throw PreconditionError("curve index out of range");
  return negative_definite(curve_gram(m, curves));
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const std::string& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate(const SurfaceModel& m) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  int rho = m.rank();
  if (rho == 0) {
    fail("empty Gram matrix");
    return report;
  }
  for (const QVec& row : m.gram)
    if (static_cast<int>(row.size()) != rho) {
      fail("Gram matrix is not square");
      return report;
    }
  if (static_cast<int>(m.basis_labels.size()) != rho)
    fail("basis label count does not match rank");
  if (!is_symmetric(m.gram)) {
    fail("Gram matrix is not symmetric");
    return report;
  }

  Signature sig = signature(m.gram);
  if (sig.positive != 1 || sig.negative != rho - 1)
    fail("Gram signature is (" + std::to_string(sig.positive) + ", " +
         std::to_string(sig.negative) + ", " + std::to_string(sig.zero) +
         "), expected (1, " + std::to_string(rho - 1) + ", 0)");

  // Labels must be unique per list, and one label must always mean one class.
  std::map<std::string, DivisorClass> meaning;
  std::set<std::string> seen;
  for (int i = 0; i < static_cast<int>(m.basis_labels.size()) && i < rho; ++i) {
    if (!seen.insert(m.basis_labels[i]).second) fail("duplicate basis label " + m.basis_labels[i]);
    meaning.emplace(m.basis_labels[i], m.basis_class(i));
  }
  auto check_list = [&](const std::vector<NamedClass>& list, const std::string& what) {
    std::set<std::string> local;
    for (const NamedClass& nc : list) {
      if (nc.cls.rank() != rho) {
        fail(what + " " + nc.label + " has wrong coordinate length");
        continue;
      }
      if (!local.insert(nc.label).second) fail("duplicate " + what + " label " + nc.label);
      auto [it, inserted] = meaning.emplace(nc.label, nc.cls);
      if (!inserted && !(it->second == nc.cls))
        fail("label " + nc.label + " bound to two different classes");
    }
  };
  check_list(m.negative_curves, "negative curve");
  check_list(m.effective_generators, "effective generator");
  if (!report.ok()) return report;

  std::set<QVec> curve_classes;
  for (const NamedClass& nc : m.negative_curves) {
    if (sign(self_intersection(m, nc.cls)) >= 0)
      fail("negative curve " + nc.label + " has self-intersection >= 0");
    if (nc.cls.is_zero()) fail("negative curve " + nc.label + " is the zero class");
    if (!curve_classes.insert(nc.cls.coords()).second)
      fail("negative curve " + nc.label + " duplicates another curve class");
  }

  std::set<QVec> generator_classes;
  for (const NamedClass& nc : m.effective_generators) {
    if (nc.cls.is_zero()) fail("effective generator " + nc.label + " is the zero class");
    generator_classes.insert(nc.cls.coords());
  }
  for (const NamedClass& nc : m.negative_curves)
    if (!generator_classes.count(nc.cls.coords()))
      fail("negative curve " + nc.label + " missing from effective generators");

  return report;
}

void require_valid(const SurfaceModel& m) {
  ValidationReport report = validate(m);
  if (!report.ok()) throw ModelError("invalid surface model: " + report.to_string());
}

}  // namespace okb
