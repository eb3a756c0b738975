#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "filiform/bracket.hpp"
#include "filiform/linalg.hpp"
#include "filiform/mpoly.hpp"

namespace filiform {

// Index data for the general adapted law with invariants (z1, z2) in
// dimension n: parameters alpha_1..alpha_{z2-z1+1}, gamma_1..gamma_{n-z2-1}
// and beta_{k,l} for 2 <= l <= n-z2, 1 <= k < z2-z1+l.
struct ParamSpec {
  int z1 = 0, z2 = 0, n = 0;

  static ParamSpec make(int z1, int z2, int n);

  int alpha_count() const { return z2 - z1 + 1; }
  int gamma_count() const { return n - z2 - 1; }
  std::vector<std::pair<int, int>> beta_indices() const; // (k,l), lexicographic
  int beta_count() const { return static_cast<int>(beta_indices().size()); }

  bool operator==(const ParamSpec&) const = default;
};

template <class S>
struct ParamValuesT {
  std::vector<S> alpha;
  std::vector<S> gamma;
  std::map<std::pair<int, int>, S> beta;
  bool operator==(const ParamValuesT&) const = default;
};

using ParamValues = ParamValuesT<Rational>;
using SymbolicValues = ParamValuesT<MPoly>;

std::string alpha_name(int i);          // "a1"
std::string gamma_name(int j);          // "g1"
std::string beta_name(int k, int l);    // "b_1_2"

// All parameters as indeterminates.
SymbolicValues symbolic_values(const ParamSpec& spec);

// var name -> value, for substituting numeric points into constraint
// polynomials.
std::map<std::string, Rational> assignment_from_values(const ParamSpec& spec,
                                                       const ParamValues& values);

template <class S>
void check_shapes(const ParamSpec& spec, const ParamValuesT<S>& values) {
  if (static_cast<int>(values.alpha.size()) != spec.alpha_count() ||
      static_cast<int>(values.gamma.size()) != spec.gamma_count())
    throw Error("parameter values do not match the declared index ranges");
  auto idx = spec.beta_indices();
  if (values.beta.size() != idx.size())
    throw Error("beta values do not match the declared index ranges");
  for (const auto& kl : idx)
    if (!values.beta.count(kl))
      throw Error("missing beta value");
}

// The complete bracket table of the general law, evaluated over rational
// values or symbolic parameters.  The recursion rows are filled in
// lexicographic (l, k) order so that both referenced brackets exist; a
// nonzero coefficient attached to a basis vector beyond e_n is an error.
template <class S>
BracketTable<S> build_law(const ParamSpec& spec, const ParamValuesT<S>& values);

struct ParamLaw {
  ParamSpec spec;
  SymbolicValues values;
  BracketTable<MPoly> table;
};

ParamLaw build_symbolic_law(const ParamSpec& spec);

// Closed conditions (polynomials that must vanish) and open conditions
// (coordinate tuples that must not vanish simultaneously).
struct ConstraintSet {
  std::vector<std::string> variables;
  std::vector<MPoly> closed;             // primitive-normalised, deduplicated
  std::vector<std::vector<MPoly>> open;  // each tuple != zero vector
};

// Closed part: every coordinate polynomial of every Jacobi defect.
// Open part: [e_{z1}, e_n] != 0 and [e_{z2}, e_{z2+1}] != 0.
// Throws if the law carries no symbolic parameters at all.
ConstraintSet jacobi_constraints(const ParamLaw& law);

template <class S>
ParamValuesT<S> scale_values(const ParamValuesT<S>& values, const S& c) {
  ParamValuesT<S> out = values;
  for (auto& a : out.alpha)
    a = c * a;
  for (auto& g : out.gamma)
    g = c * g;
  for (auto& [kl, b] : out.beta)
    b = c * b;
  return out;
}

// lambda-rescaling of the parameters together with the adapted-basis change
// f_1 = e_1, f_h = lambda e_h (h >= 2); the returned matrix is an
// isomorphism from build_law(spec, lambda*values) onto build_law(spec, values).
std::pair<ParamValues, QMatrix> rescale(const ParamSpec& spec, const ParamValues& values,
                                        const Rational& lambda);

// Leading-coefficient normalisation: divide by alpha_1 when alpha_1 != 0,
// otherwise by the first nonzero gamma.  Throws when neither exists.
ParamValues normalize(const ParamValues& values);

// Textual export of a constraint system, one polynomial per line.
std::string constraints_text(const ConstraintSet& cs);

} // namespace filiform
