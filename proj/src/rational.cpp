#include "bhcr/rational.hpp"

#include <charconv>
#include <numeric>

#include "bhcr/error.hpp"

namespace bhcr {

Integer floor_of(const Rational& r) {
  Integer q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

Rational mod_one(const Rational& r) { return r - Rational(floor_of(r)); }

bool is_integral(const Rational& r) { return r.denominator() == 1; }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  Integer value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer num = parse_integer(trim(s.substr(0, slash)), text);
  Integer den = parse_integer(trim(s.substr(slash + 1)), text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer lcm_of_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& r : v) l = std::lcm(l, r.denominator());
  return l;
}

Integer gcd_of(const std::vector<Integer>& v) {
  Integer g = 0;
  for (Integer x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace bhcr
