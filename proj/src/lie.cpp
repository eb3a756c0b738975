#include "filiform/lie.hpp"

#include <optional>

namespace filiform {

std::optional<JacobiFailure> find_jacobi_failure(const StructureConstants& L) {
  int n = L.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        QVector d = L.jacobi_defect(i, j, k);
        if (!qvec_is_zero(d))
          return JacobiFailure{i, j, k, std::move(d)};
      }
  return std::nullopt;
}

bool is_lie(const StructureConstants& L) { return !find_jacobi_failure(L).has_value(); }

namespace {

// 1-based indices when every basis row is a standard unit vector
std::optional<std::vector<bool>> unit_index_set(const Subspace& s) {
  std::vector<bool> idx(s.ambient_dim() + 1, false);
  for (const auto& row : s.basis()) {
    int nz = -1;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0)
        continue;
      if (nz >= 0 || row[i] != 1)
        return std::nullopt;
      nz = static_cast<int>(i);
    }
    if (nz < 0)
      return std::nullopt;
    idx[static_cast<std::size_t>(nz) + 1] = true;
  }
  return idx;
}

} // namespace

Subspace subspace_bracket(const StructureConstants& L, const Subspace& u, const Subspace& v) {
  std::size_t n = static_cast<std::size_t>(L.dim());
  if (u.ambient_dim() != n || v.ambient_dim() != n)
    throw DimensionMismatch("subspace_bracket: ambient dimension mismatch");
  std::vector<QVector> gens;
  // spans of standard basis vectors (the common case for the lower central
  // series of adapted laws) reduce to plain table lookups
  auto ui = unit_index_set(u);
  auto vi = unit_index_set(v);
  if (ui && vi) {
    for (const auto& [pair, value] : L.entries()) {
      auto [i, j] = pair;
      std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
      if (((*ui)[si] && (*vi)[sj]) || ((*ui)[sj] && (*vi)[si]))
        gens.push_back(value);
    }
    return Subspace::span(gens, n);
  }
  gens.reserve(u.dim() * v.dim());
  for (const auto& a : u.basis())
    for (const auto& b : v.basis()) {
      QVector w = L.bracket(a, b);
      if (!qvec_is_zero(w))
        gens.push_back(std::move(w));
    }
  return Subspace::span(gens, n);
}

const Subspace& LowerCentralSeries::at(int k) const {
  if (k < 1)
    throw Error("lower central series index must be >= 1");
  std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(k), terms.size());
  return terms[idx - 1];
}

LowerCentralSeries lower_central_series(const StructureConstants& L) {
  LowerCentralSeries series;
  Subspace whole = full_space(L.dim());
  series.terms.push_back(whole);
  for (;;) {
    Subspace next = subspace_bracket(L, series.terms.back(), whole);
    if (next == series.terms.back())
      break;
    series.terms.push_back(std::move(next));
  }
  series.nilpotent = series.terms.back().is_zero();
  return series;
}

bool is_nilpotent(const StructureConstants& L) { return lower_central_series(L).nilpotent; }

bool is_abelian_subspace(const StructureConstants& L, const Subspace& s) {
  return subspace_bracket(L, s, s).is_zero();
}

Subspace centralizer(const StructureConstants& L, const Subspace& s) {
  std::size_t n = static_cast<std::size_t>(L.dim());
  if (s.ambient_dim() != n)
    throw DimensionMismatch("centralizer: ambient dimension mismatch");
  if (s.dim() == 0)
    return full_space(L.dim());
  // rows of the stacked matrix: for each basis vector b of S and each
  // coordinate t, the linear form x -> ([x, b])_t
  QMatrix m(s.dim() * n, n);
  std::size_t row = 0;
  for (const auto& b : s.basis()) {
    // adjoint of b applied to each basis vector, placed column-wise
    for (std::size_t col = 0; col < n; ++col) {
      QVector img = L.bracket(unit_vector(n, static_cast<int>(col) + 1), b);
      for (std::size_t t = 0; t < n; ++t)
        m.at(row + t, col) = img[t];
    }
    row += n;
  }
  return Subspace::span(kernel_basis(m), n);
}

Subspace full_space(int n) {
  std::vector<QVector> basis;
  for (int h = 1; h <= n; ++h)
    basis.push_back(unit_vector(static_cast<std::size_t>(n), h));
  return Subspace::span(basis, static_cast<std::size_t>(n));
}

} // namespace filiform
