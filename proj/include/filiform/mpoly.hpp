#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "filiform/rational.hpp"

namespace filiform {

// Digit-run aware comparison, so a2 < a10 and b_1_2 < b_2_2.
bool natural_less(std::string_view a, std::string_view b);

// Sparse multivariate polynomial over Q with named variables.  The variable
// list is kept sorted (natural order) and pruned of unused names, so
// semantically equal polynomials compare equal structurally.
class MPoly {
public:
  using Exponents = std::vector<unsigned>;

  MPoly() = default; // zero
  explicit MPoly(const Rational& c);
  explicit MPoly(long long c) : MPoly(Rational(c)) {}
  static MPoly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Throws unless is_constant().
  Rational constant_value() const;
  int total_degree() const; // -1 for the zero polynomial

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  MPoly operator-() const;
  MPoly operator+(const MPoly& other) const;
  MPoly operator-(const MPoly& other) const;
  MPoly operator*(const MPoly& other) const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  friend MPoly operator*(const Rational& c, const MPoly& p);
  bool operator==(const MPoly&) const = default;

  // Partial substitution; returns a polynomial in the remaining variables
  // (a constant polynomial if the assignment was total).
  MPoly substitute(const std::map<std::string, Rational>& assignment) const;
  // Total evaluation; throws if a variable is left unassigned.
  Rational eval(const std::map<std::string, Rational>& assignment) const;

  // Scalar-normalised form: integer coefficients with content 1 and a
  // positive leading coefficient.  Zero stays zero.
  MPoly primitive() const;

  std::string str() const;

private:
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_; // exponent vector (len == vars_) -> nonzero coeff

  void prune();
  static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b);
  MPoly remapped(const std::vector<std::string>& new_vars) const;
};

} // namespace filiform
