#pragma once

#include <utility>
#include <vector>

#include "filiform/invariants.hpp"
#include "filiform/paramlaw.hpp"

namespace filiform {

// p = floor((n - z1 - 1) / 2), the number of leading alpha parameters that
// vanish on the (z1, n-2, n) family.
int family_p(int z1, int n);

// true iff M is invertible and M [e_i,e_j]_source = [M e_i, M e_j]_target
// for all basis pairs.  Columns of M are the images of the basis vectors.
bool verify_isomorphism(const QMatrix& m, const StructureConstants& source,
                        const StructureConstants& target);

// The (n-2, n-2, n) law: [e_{n-2},e_{n-1}] = a e2, [e_{n-2},e_n] = a e3 + g e2,
// [e_{n-1},e_n] = a e4 + g e3 + b e2.  Requires n >= 6, a != 0.
StructureConstants law_n2n2n(int n, const Rational& a, const Rational& g, const Rational& b);

struct ClassifyResult {
  int class_id; // 1: gamma/alpha != 0, 2: gamma/alpha = 0
  StructureConstants canonical;
  QMatrix iso; // from the input law onto the canonical one, verified
};

ClassifyResult classify_n2n2n(int n, const Rational& a, const Rational& g, const Rational& b);

// The (z1, n-2, n) family with z1 < n-2: alpha_1..alpha_p forced to zero.
// alpha_tail lists alpha_{p+1}..alpha_{n-z1-1} (not all zero), beta lists
// beta_{k,2} for k = 1..n-z1-1.  Requires gamma1 != 0.
StructureConstants law_z1_n2_n(int z1, int n, const std::vector<Rational>& alpha_tail,
                               const Rational& gamma1, const std::vector<Rational>& beta);

// Closed-form Hilbert polynomial of law_z1_n2_n; only the position of the
// first nonzero alpha_tail entry matters.
BiPoly hp_closed_form(int z1, int n, const std::vector<Rational>& alpha_tail);

int theta2_closed(int z1, int n, const std::vector<Rational>& alpha_tail);

// n - z1 - p - 1
int count_hp_classes(int z1, int n);

// For the (n-q, n-2, n) family: the change of basis
//   e_i -> e_i (i <= q),  e_j -> beta_{q-1,2}/((q-1) alpha_2) e_{j-(q-1)} + e_j
// removes beta_{q-1,2}.  Returns the matrix together with the reduced values;
// the matrix conjugates build_law(reduced) onto build_law(values).
// Requires 3 <= q <= n-4, n >= 7 and alpha_2 != 0.
std::pair<QMatrix, ParamValues> iso_reduce_nq(int n, int q, const ParamValues& values);

} // namespace filiform
