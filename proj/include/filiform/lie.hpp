#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "filiform/bracket.hpp"
#include "filiform/linalg.hpp"

namespace filiform {

struct JacobiFailure {
  int i, j, k;
  QVector defect;
};

// First triple i < j < k whose Jacobi defect is nonzero, if any.
std::optional<JacobiFailure> find_jacobi_failure(const StructureConstants& L);

bool is_lie(const StructureConstants& L);

// Span of the pairwise brackets of basis vectors of U and V.
Subspace subspace_bracket(const StructureConstants& L, const Subspace& u, const Subspace& v);

// C^1 = g, C^{k+1} = [C^k, g], computed until the first repeated term.
// For nilpotent algebras the last term is the zero subspace.
struct LowerCentralSeries {
  std::vector<Subspace> terms;
  bool nilpotent = false;

  // C^k with clamping: indices past the computed chain return the
  // stabilized term.
  const Subspace& at(int k) const;
  int length() const { return static_cast<int>(terms.size()); }
};

LowerCentralSeries lower_central_series(const StructureConstants& L);

bool is_nilpotent(const StructureConstants& L);

bool is_abelian_subspace(const StructureConstants& L, const Subspace& s);

// { x : [x, s] = 0 for all s in S }, as the kernel of the stacked adjoint
// maps of a basis of S.
Subspace centralizer(const StructureConstants& L, const Subspace& s);

Subspace full_space(int n);

} // namespace filiform
