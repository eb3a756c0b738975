#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "filiform/errors.hpp"

namespace filiform {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rational& r);

// Parses "p", "-p", "p/q". Rejects zero denominators and garbage.
Rational rat_parse(std::string_view s);

Rational rat_pow(const Rational& base, unsigned exp);

} // namespace filiform
