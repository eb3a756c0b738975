#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "filiform/lie.hpp"

namespace filiform {

// r* = n+1-r
inline int star(int r, int n) { return n + 1 - r; }

// Bivariate polynomial with nonnegative integer coefficients, stored
// sparsely as (k, l) -> coefficient.
class BiPoly {
public:
  BiPoly() = default;

  int get(int k, int l) const;
  void set(int k, int l, int c); // c == 0 erases
  void add(int k, int l, int c);
  const std::map<std::pair<int, int>, int>& coeffs() const { return coeffs_; }
  std::set<std::pair<int, int>> support() const;
  bool is_zero() const { return coeffs_.empty(); }
  int total_degree() const;

  bool is_symmetric() const;
  // downward closed support in the product order on (k, l)
  bool support_is_lower_set() const;

  BiPoly operator+(const BiPoly& other) const;
  // Throws if any coefficient of the difference would be negative.
  BiPoly checked_minus(const BiPoly& other) const;
  bool operator==(const BiPoly&) const = default;

  std::string str() const; // "3*t*s + 2*t^2*s + ..."

private:
  std::map<std::pair<int, int>, int> coeffs_;
};

struct Triple {
  int z1 = 0, z2 = 0, n = 0;
  bool operator==(const Triple&) const = default;
  // 4 <= z1 <= z2 < n <= 2*z2 - 2
  bool bounds_ok() const;
};

struct ThetaVector {
  std::vector<int> entries; // entries[k-1] = theta_k, k = 1..n-1
  bool operator==(const ThetaVector&) const = default;
};

// dim C^k = n-k for k = 2..n (and the table is a Lie algebra).
bool is_filiform(const StructureConstants& L);

// The three adapted-basis relation families hold in the table:
// [e1,e_h] = e_{h-1} (h >= 3), [e2,.] = 0, [e3,e_h] = 0 (h >= 2).
bool is_adapted(const StructureConstants& L);

// The model filiform algebra: [e1, e_h] = e_{h-1} and nothing else.
StructureConstants model_algebra(int n);

// An adapted table with no bracket beyond the model relations.
bool is_model(const StructureConstants& L);

// z1 = min{k >= 4 : [e_k, e_n] != 0}, z2 = min{k >= 4 : [e_k, e_{k+1}] != 0};
// requires an adapted filiform non-model algebra.
Triple invariants_adapted(const StructureConstants& L);

// Definitional route for z1: max{k : centralizer(C^{n-k+2+shift}) strictly
// contains C^2}.  shift = 0 evaluates the definition as written.
int z1_centralizer(const StructureConstants& L, int shift = 0);

// Definitional route for z2: max{k : C^{n-k+1} is abelian}.
int z2_abelian(const StructureConstants& L);

// theta_k = min{l : [C^k, C^l] = 0}, for k = 1..n-1.  Requires nilpotency.
ThetaVector theta_vector(const StructureConstants& L);

// HP = sum dim[C^k, C^l] t^k s^l.  Requires nilpotency.
BiPoly hilbert_polynomial(const StructureConstants& L);

// (n-2) t s + sum_{2<=k<=n-2} (n-k-1) (t^k s + t s^k)
BiPoly hp0(int n);

// hilbert_polynomial(L) - hp0(n); requires L filiform.
BiPoly hp2(const StructureConstants& L);

// supp(HP)
std::set<std::pair<int, int>> support_estar(const StructureConstants& L);

} // namespace filiform
