#include "okb/rational.hpp"

#include <cctype>

#include "okb/errors.hpp"

namespace okb {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) throw ParseError("empty rational literal");

  auto is_integer_literal = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  size_t slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  if (!is_integer_literal(num_part))
    throw ParseError("bad rational literal: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(Integer(std::string(num_part)));

  std::string_view den_part = body.substr(slash + 1);
  if (!is_integer_literal(den_part) || den_part[0] == '-' || den_part[0] == '+')
    throw ParseError("bad rational literal: '" + std::string(text) + "'");
  Integer den{std::string(den_part)};
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(Integer(std::string(num_part)), den);
}

std::string to_string(const Rational& q) {
  return q.get_str();  // mpq canonical form is exactly "a" or "a/b", b > 0
}

int sign(const Rational& q) { return sgn(q); }

std::string decimal_string(const Rational& q, int digits) {
  Integer pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;

  // Round |q| * 10^digits to an integer, ties to even.
  Integer num = abs(q.get_num()) * pow10;
  const Integer& den = q.get_den();
  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice = 2 * rem;
  if (twice > den || (twice == den && mpz_odd_p(quot.get_mpz_t())))
    quot += 1;

  Integer whole = quot / pow10;
  Integer frac = quot % pow10;
  std::string out = whole.get_str();
  if (digits > 0) {  // digits == 0 has no fractional part at all
    std::string frac_digits = frac.get_str();
    frac_digits.insert(0, static_cast<size_t>(digits) - frac_digits.size(), '0');
    // Trim trailing zeros; drop the point entirely when the fraction vanishes.
    size_t last = frac_digits.find_last_not_of('0');
    if (last != std::string::npos) out += "." + frac_digits.substr(0, last + 1);
  }
  if (sign(q) < 0 && quot != 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace okb
