#pragma once

#include <map>
#include <utility>
#include <vector>

#include "filiform/errors.hpp"
#include "filiform/mpoly.hpp"
#include "filiform/rational.hpp"

namespace filiform {

inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const MPoly& x) { return x.is_zero(); }

// Structure constants of an anticommutative algebra on basis e_1..e_n.
// Only pairs i < j are stored (nonzero vectors only); brackets for i >= j
// follow from alternation.  Scalars S are a commutative ring: the same
// table works over exact rationals and over polynomials in parameters.
//
// Basis indices are 1-based everywhere; raw coordinate access is 0-based.
template <class S>
class BracketTable {
public:
  explicit BracketTable(int dim) : dim_(dim) {
    if (dim < 1)
      throw Error("algebra dimension must be positive");
  }

  int dim() const { return dim_; }

  void set(int i, int j, std::vector<S> value) {
    check_pair(i, j);
    if (value.size() != static_cast<std::size_t>(dim_))
      throw DimensionMismatch("bracket value has wrong length");
    if (all_zero(value))
      entries_.erase({i, j});
    else
      entries_[{i, j}] = std::move(value);
  }

  // [e_i, e_j] for i < j; the zero vector when unset.
  std::vector<S> entry(int i, int j) const {
    check_pair(i, j);
    auto it = entries_.find({i, j});
    if (it == entries_.end())
      return zero_vec();
    return it->second;
  }

  // [e_i, e_j] for arbitrary indices in range.
  std::vector<S> bracket_basis(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j)
      return zero_vec();
    if (i < j)
      return entry(i, j);
    auto v = entry(j, i);
    for (auto& c : v)
      c = -c;
    return v;
  }

  // [u, e_k], bilinear in u.
  std::vector<S> bracket_vec_basis(const std::vector<S>& u, int k) const {
    if (u.size() != static_cast<std::size_t>(dim_))
      throw DimensionMismatch("bracket operand has wrong length");
    check_index(k);
    std::vector<S> acc = zero_vec();
    for (const auto& [pair, value] : entries_) {
      auto [i, j] = pair;
      if (j == k) {
        axpy(acc, u[static_cast<std::size_t>(i - 1)], value);
      } else if (i == k) {
        S c = -u[static_cast<std::size_t>(j - 1)];
        axpy(acc, c, value);
      }
    }
    return acc;
  }

  // [u, v], bilinear.
  std::vector<S> bracket(const std::vector<S>& u, const std::vector<S>& v) const {
    if (u.size() != static_cast<std::size_t>(dim_) || v.size() != static_cast<std::size_t>(dim_))
      throw DimensionMismatch("bracket operand has wrong length");
    std::vector<S> acc = zero_vec();
    for (const auto& [pair, value] : entries_) {
      const S& ui = u[static_cast<std::size_t>(pair.first - 1)];
      const S& vj = v[static_cast<std::size_t>(pair.second - 1)];
      const S& uj = u[static_cast<std::size_t>(pair.second - 1)];
      const S& vi = v[static_cast<std::size_t>(pair.first - 1)];
      if ((ring_is_zero(ui) || ring_is_zero(vj)) && (ring_is_zero(uj) || ring_is_zero(vi)))
        continue;
      S c = ui * vj - uj * vi;
      axpy(acc, c, value);
    }
    return acc;
  }

  // J(e_i,e_j,e_k) = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
  std::vector<S> jacobi_defect(int i, int j, int k) const {
    if (!(1 <= i && i < j && j < k && k <= dim_))
      throw Error("jacobi_defect: indices must satisfy 1 <= i < j < k <= n");
    std::vector<S> acc = bracket_vec_basis(entry(i, j), k);
    add(acc, bracket_vec_basis(entry(j, k), i));
    add(acc, bracket_vec_basis(bracket_basis(k, i), j));
    return acc;
  }

  const std::map<std::pair<int, int>, std::vector<S>>& entries() const { return entries_; }

  bool operator==(const BracketTable&) const = default;

private:
  int dim_;
  std::map<std::pair<int, int>, std::vector<S>> entries_;

  std::vector<S> zero_vec() const { return std::vector<S>(static_cast<std::size_t>(dim_)); }

  static bool all_zero(const std::vector<S>& v) {
    for (const auto& c : v)
      if (!ring_is_zero(c))
        return false;
    return true;
  }

  static void axpy(std::vector<S>& acc, const S& c, const std::vector<S>& v) {
    if (ring_is_zero(c))
      return;
    for (std::size_t t = 0; t < v.size(); ++t)
      acc[t] += c * v[t];
  }

  static void add(std::vector<S>& acc, const std::vector<S>& v) {
    for (std::size_t t = 0; t < v.size(); ++t)
      acc[t] += v[t];
  }

  void check_index(int i) const {
    if (i < 1 || i > dim_)
      throw Error("basis index out of range");
  }

  void check_pair(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i >= j)
      throw Error("bracket table pairs require i < j");
  }
};

using StructureConstants = BracketTable<Rational>;

} // namespace filiform
