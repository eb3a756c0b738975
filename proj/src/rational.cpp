#include "filiform/rational.hpp"

#include <cctype>

namespace filiform {

std::string rat_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

namespace {

Int parse_int(std::string_view s, std::string_view original) {
  bool neg = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size())
    throw ParseError("bad rational: '" + std::string(original) + "'");
  Int value = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("bad rational: '" + std::string(original) + "'");
    value = value * 10 + (s[pos] - '0');
  }
  return neg ? -value : value;
}

} // namespace

Rational rat_parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(s, s));
  Int num = parse_int(s.substr(0, slash), s);
  Int den = parse_int(s.substr(slash + 1), s);
  if (den == 0)
    throw ParseError("zero denominator in rational: '" + std::string(s) + "'");
  return Rational(num, den);
}

Rational rat_pow(const Rational& base, unsigned exp) {
  Rational acc = 1;
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u)
      acc *= b;
    b *= b;
    exp >>= 1u;
  }
  return acc;
}

} // namespace filiform
