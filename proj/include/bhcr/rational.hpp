#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace bhcr {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;
using RationalVector = std::vector<Rational>;

/// Representative of r modulo Z in [0, 1).
Rational mod_one(const Rational& r);

bool is_integral(const Rational& r);

Integer floor_of(const Rational& r);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" and "-p/q" with optional surrounding blanks.
Rational parse_rational(std::string_view text);

Integer lcm_of_denominators(const RationalVector& v);

Integer gcd_of(const std::vector<Integer>& v);

}  // namespace bhcr
