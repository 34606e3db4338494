#include "okb/divisor.hpp"

#include <algorithm>

#include "okb/errors.hpp"

namespace okb {

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool DivisorClass::lex_less(const DivisorClass& other) const {
  return std::lexicographical_compare(coords_.begin(), coords_.end(),
                                      other.coords_.begin(), other.coords_.end());
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (rank() != other.rank()) throw PreconditionError("class addition: rank mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (rank() != other.rank()) throw PreconditionError("class subtraction: rank mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  for (Rational& c : coords_) c *= s;
  return *this;
}

DivisorClass DivisorClass::primitive() const {
  if (is_zero()) throw PreconditionError("primitive representative of the zero class");
  Integer den_lcm = 1;
  for (const Rational& c : coords_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const Rational& c : coords_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  DivisorClass out = *this;
  out *= make_rational(den_lcm, num_gcd);
  return out;
}

std::string DivisorClass::to_string() const {
  std::string out = "(";
  for (int i = 0; i < rank(); ++i) {
    if (i > 0) out += ", ";
    out += okb::to_string(coords_[i]);
  }
  return out + ")";
}

DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }

CurveSubset::CurveSubset(std::vector<int> indices) : indices_(std::move(indices)) {
  for (size_t i = 0; i + 1 < indices_.size(); ++i)
    if (indices_[i] >= indices_[i + 1])
      throw PreconditionError("curve subset indices must be strictly increasing");
  if (!indices_.empty() && indices_.front() < 0)
    throw PreconditionError("negative curve index");
}

bool CurveSubset::contains(int curve) const {
  return std::binary_search(indices_.begin(), indices_.end(), curve);
}

CurveSubset CurveSubset::with(int curve) const {
  std::vector<int> out = indices_;
  out.insert(std::upper_bound(out.begin(), out.end(), curve), curve);
  return CurveSubset(std::move(out));
}

bool CurveSubset::canonical_less(const CurveSubset& other) const {
  if (indices_.size() != other.indices_.size())
    return indices_.size() < other.indices_.size();
  return indices_ < other.indices_;
}

std::string CurveSubset::to_string(const std::vector<std::string>& labels) const {
  std::string out = "{";
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels[indices_[i]];
  }
  return out + "}";
}

}  // namespace okb
