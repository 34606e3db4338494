#include "okb/zariski.hpp"

#include <algorithm>
#include <functional>

#include "okb/cones.hpp"
#include "okb/errors.hpp"

namespace okb {

Rational ZariskiDecomposition::coefficient(int curve) const {
  for (size_t k = 0; k < coefficients.size(); ++k)
    if (support.indices()[k] == curve) return coefficients[k];
  return 0;
}

ZariskiDecomposition decompose(const SurfaceModel& m, const DivisorClass& d) {
  if (!is_pseudoeffective(m, d))
    throw PreconditionError("Zariski decomposition requires a pseudoeffective class");

  int curves = static_cast<int>(m.negative_curves.size());
  std::vector<bool> in_support(curves, false);
  for (int i = 0; i < curves; ++i)
    if (sign(intersect(m, d, m.curve(i))) < 0) in_support[i] = true;

  // Grow the support until the candidate positive part clears every curve.
  // Each round adds at least one curve, so this ends after <= #curves rounds.
  QVec coeffs;
  DivisorClass p;
  while (true) {
    std::vector<int> idx;
    for (int i = 0; i < curves; ++i)
      if (in_support[i]) idx.push_back(i);
    CurveSubset support(idx);

    p = d;
    coeffs.assign(idx.size(), Rational(0));
    if (!idx.empty()) {
      QVec rhs;
      for (int i : idx) rhs.push_back(intersect(m, d, m.curve(i)));
      std::optional<QVec> sol = solve_square(curve_gram(m, support), std::move(rhs));
      if (!sol)
        throw InternalError("Zariski support Gram matrix is singular; model is not geometric");
      coeffs = std::move(*sol);
      for (size_t k = 0; k < idx.size(); ++k) p -= coeffs[k] * m.curve(idx[k]);
    }

    bool grew = false;
    for (int i = 0; i < curves; ++i)
      if (!in_support[i] && sign(intersect(m, p, m.curve(i))) < 0) {
        in_support[i] = true;
        grew = true;
      }
    if (grew) continue;

    for (const Rational& c : coeffs)
      if (sign(c) < 0)
        throw InternalError("negative Zariski coefficient; model is not geometric");
    if (!is_nef(m, p))
      throw InternalError("Zariski positive part is not nef; model is not geometric");

    // Drop zero coefficients so the reported support is the strict one.
    ZariskiDecomposition out;
    out.positive = p;
    out.negative = d - p;
    std::vector<int> strict;
    for (size_t k = 0; k < idx.size(); ++k)
      if (sign(coeffs[k]) > 0) {
        strict.push_back(idx[k]);
        out.coefficients.push_back(coeffs[k]);
      }
    out.support = CurveSubset(std::move(strict));
    return out;
  }
}

Rational volume(const SurfaceModel& m, const DivisorClass& d) {
  return self_intersection(m, decompose(m, d).positive);
}

namespace {

// Depth-first extension by larger indices; negative definiteness is
// hereditary, so a failed extension never needs revisiting.
void walk_chambers(const SurfaceModel& m, CurveSubset& current,
                   const std::function<void(const CurveSubset&)>& visit) {
  int curves = static_cast<int>(m.negative_curves.size());
  int next_min = current.empty() ? 0 : current.indices().back() + 1;
  for (int j = next_min; j < curves; ++j) {
    CurveSubset extended = current.with(j);
    if (!is_negative_definite(m, extended)) continue;
    visit(extended);
    walk_chambers(m, extended, visit);
  }
}

}  // namespace

std::vector<CurveSubset> enumerate_chambers(const SurfaceModel& m) {
  std::vector<CurveSubset> out;
  CurveSubset empty;
  walk_chambers(m, empty, [&](const CurveSubset& s) { out.push_back(s); });
  std::sort(out.begin(), out.end(),
            [](const CurveSubset& a, const CurveSubset& b) { return a.canonical_less(b); });
  return out;
}

long chamber_count(const SurfaceModel& m) {
  long count = 0;
  CurveSubset empty;
  walk_chambers(m, empty, [&](const CurveSubset&) { ++count; });
  return count;
}

std::optional<std::pair<int, int>> star_witness(const SurfaceModel& m) {
  int curves = static_cast<int>(m.negative_curves.size());
  for (int i = 0; i < curves; ++i)
    for (int j = i + 1; j < curves; ++j) {
      Rational meet = intersect(m, m.curve(i), m.curve(j));
      if (sign(meet) <= 0) continue;
      if (meet * meet < self_intersection(m, m.curve(i)) * self_intersection(m, m.curve(j)))
        return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool satisfies_star(const SurfaceModel& m) { return !star_witness(m).has_value(); }

bool is_simple_weyl(const SurfaceModel& m) {
  // A chamber with a non-diagonal Gram contains a meeting pair, and that
  // pair is itself a chamber (definiteness is hereditary), so checking the
  // two-element chambers decides the property.
  int curves = static_cast<int>(m.negative_curves.size());
  for (int i = 0; i < curves; ++i)
    for (int j = i + 1; j < curves; ++j) {
      if (intersect(m, m.curve(i), m.curve(j)) == 0) continue;
      if (is_negative_definite(m, CurveSubset({i, j}))) return false;
    }
  return true;
}

CurveSubset b_plus_null(const SurfaceModel& m, const DivisorClass& d) {
  if (!is_big(m, d)) throw PreconditionError("b_plus_null requires a big class");
  DivisorClass p = decompose(m, d).positive;
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(m.negative_curves.size()); ++i)
    if (intersect(m, p, m.curve(i)) == 0) idx.push_back(i);
  return CurveSubset(std::move(idx));
}

}  // namespace okb
