#include "filiform/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace filiform {

int BiPoly::get(int k, int l) const {
  auto it = coeffs_.find({k, l});
  return it == coeffs_.end() ? 0 : it->second;
}

void BiPoly::set(int k, int l, int c) {
  if (c == 0)
    coeffs_.erase({k, l});
  else
    coeffs_[{k, l}] = c;
}

void BiPoly::add(int k, int l, int c) { set(k, l, get(k, l) + c); }

std::set<std::pair<int, int>> BiPoly::support() const {
  std::set<std::pair<int, int>> s;
  for (const auto& [kl, c] : coeffs_)
    s.insert(kl);
  return s;
}

int BiPoly::total_degree() const {
  int deg = 0;
  for (const auto& [kl, c] : coeffs_)
    deg = std::max(deg, kl.first + kl.second);
  return deg;
}

bool BiPoly::is_symmetric() const {
  for (const auto& [kl, c] : coeffs_)
    if (get(kl.second, kl.first) != c)
      return false;
  return true;
}

bool BiPoly::support_is_lower_set() const {
  for (const auto& [kl, c] : coeffs_) {
    auto [k, l] = kl;
    if (k > 1 && get(k - 1, l) == 0)
      return false;
    if (l > 1 && get(k, l - 1) == 0)
      return false;
  }
  return true;
}

BiPoly BiPoly::operator+(const BiPoly& other) const {
  BiPoly out = *this;
  for (const auto& [kl, c] : other.coeffs_)
    out.add(kl.first, kl.second, c);
  return out;
}

BiPoly BiPoly::checked_minus(const BiPoly& other) const {
  BiPoly out = *this;
  for (const auto& [kl, c] : other.coeffs_) {
    int d = out.get(kl.first, kl.second) - c;
    if (d < 0)
      throw Error("BiPoly difference has a negative coefficient at (" +
                  std::to_string(kl.first) + "," + std::to_string(kl.second) + ")");
    out.set(kl.first, kl.second, d);
  }
  return out;
}

std::string BiPoly::str() const {
  if (coeffs_.empty())
    return "0";
  std::vector<std::pair<std::pair<int, int>, int>> ordered(coeffs_.begin(), coeffs_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    if (dx != dy)
      return dx < dy;
    return x.first < y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [kl, c] : ordered) {
    if (!first)
      os << " + ";
    first = false;
    if (c != 1)
      os << c << "*";
    os << "t";
    if (kl.first != 1)
      os << "^" << kl.first;
    os << "*s";
    if (kl.second != 1)
      os << "^" << kl.second;
  }
  return os.str();
}

bool Triple::bounds_ok() const { return 4 <= z1 && z1 <= z2 && z2 < n && n <= 2 * z2 - 2; }

bool is_filiform(const StructureConstants& L) {
  int n = L.dim();
  if (n < 2 || !is_lie(L))
    return false;
  auto series = lower_central_series(L);
  if (!series.nilpotent)
    return false;
  for (int k = 2; k <= n; ++k)
    if (static_cast<int>(series.at(k).dim()) != n - k)
      return false;
  return true;
}

bool is_adapted(const StructureConstants& L) {
  int n = L.dim();
  for (const auto& entry : L.entries()) {
    int i = entry.first.first;
    if (i == 2 || i == 3)
      return false; // [e2,.] = 0 and [e3,.] = 0 for partners above them
  }
  if (n >= 2 && !qvec_is_zero(L.entry(1, 2)))
    return false;
  for (int h = 3; h <= n; ++h)
    if (L.entry(1, h) != unit_vector(static_cast<std::size_t>(n), h - 1))
      return false;
  return true;
}

StructureConstants model_algebra(int n) {
  if (n < 2)
    throw Error("model algebra requires dimension >= 2");
  StructureConstants L(n);
  for (int h = 3; h <= n; ++h)
    L.set(1, h, unit_vector(static_cast<std::size_t>(n), h - 1));
  return L;
}

bool is_model(const StructureConstants& L) {
  if (!is_adapted(L))
    return false;
  for (const auto& entry : L.entries())
    if (entry.first.first != 1)
      return false;
  return true;
}

Triple invariants_adapted(const StructureConstants& L) {
  if (!is_adapted(L))
    throw Error("invariants_adapted requires an adapted table");
  if (!is_filiform(L))
    throw Error("invariants_adapted requires a filiform Lie algebra");
  if (is_model(L))
    throw ModelAlgebraError("z1/z2 are undefined for the model filiform algebra");
  int n = L.dim();
  Triple t;
  t.n = n;
  t.z1 = 0;
  for (int k = 4; k < n; ++k)
    if (!qvec_is_zero(L.entry(k, n))) {
      t.z1 = k;
      break;
    }
  t.z2 = 0;
  for (int k = 4; k < n; ++k)
    if (!qvec_is_zero(L.entry(k, k + 1))) {
      t.z2 = k;
      break;
    }
  if (t.z1 == 0 || t.z2 == 0)
    throw Error("adapted invariants undefined: no qualifying bracket found");
  return t;
}

int z1_centralizer(const StructureConstants& L, int shift) {
  if (is_model(L))
    throw ModelAlgebraError("z1 is undefined for the model filiform algebra");
  int n = L.dim();
  auto series = lower_central_series(L);
  const Subspace& c2 = series.at(2);
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    int idx = n - k + 2 + shift;
    if (idx < 1)
      continue;
    Subspace cent = centralizer(L, series.at(idx));
    if (cent.contains_subspace(c2) && cent != c2)
      best = k;
  }
  if (best == 0)
    throw Error("z1_centralizer: no qualifying k");
  return best;
}

int z2_abelian(const StructureConstants& L) {
  if (is_model(L))
    throw ModelAlgebraError("z2 is undefined for the model filiform algebra");
  int n = L.dim();
  auto series = lower_central_series(L);
  int best = 0;
  for (int k = 1; k <= n; ++k) {
    int idx = n - k + 1;
    if (idx < 1)
      continue;
    if (is_abelian_subspace(L, series.at(idx)))
      best = k;
  }
  if (best == 0)
    throw Error("z2_abelian: no abelian term in the lower central series");
  return best;
}

ThetaVector theta_vector(const StructureConstants& L) {
  auto series = lower_central_series(L);
  if (!series.nilpotent)
    throw Error("theta_vector requires a nilpotent algebra");
  int n = L.dim();
  ThetaVector theta;
  // [C^1, C^l] = C^{l+1} by definition, so theta_1 falls out of the series
  int theta1 = 1;
  while (!series.at(theta1 + 1).is_zero())
    ++theta1;
  theta.entries.push_back(theta1);
  // theta is weakly decreasing in k; walk each value down from the previous
  int prev = theta1;
  for (int k = 2; k <= n - 1; ++k) {
    int l = prev;
    while (l > 1 && subspace_bracket(L, series.at(k), series.at(l - 1)).is_zero())
      --l;
    theta.entries.push_back(l);
    prev = l;
  }
  return theta;
}

BiPoly hilbert_polynomial(const StructureConstants& L) {
  auto series = lower_central_series(L);
  if (!series.nilpotent)
    throw Error("hilbert_polynomial requires a nilpotent algebra");
  BiPoly hp;
  // k = 1 row: [C^1, C^l] = C^{l+1} by definition of the series
  for (int l = 1; !series.at(l + 1).is_zero(); ++l) {
    int d = static_cast<int>(series.at(l + 1).dim());
    hp.set(1, l, d);
    hp.set(l, 1, d);
  }
  for (int k = 2; !series.at(k).is_zero(); ++k) {
    bool row_empty = true;
    for (int l = k; !series.at(l).is_zero(); ++l) {
      int d = static_cast<int>(subspace_bracket(L, series.at(k), series.at(l)).dim());
      if (d == 0)
        break; // the bifiltration is decreasing in l
      row_empty = false;
      hp.set(k, l, d);
      hp.set(l, k, d);
    }
    if (row_empty)
      break; // decreasing in k as well
  }
  return hp;
}

BiPoly hp0(int n) {
  if (n < 2)
    throw Error("hp0 requires n >= 2");
  BiPoly p;
  if (n > 2)
    p.set(1, 1, n - 2);
  for (int k = 2; k <= n - 2; ++k) {
    p.set(k, 1, n - k - 1);
    p.set(1, k, n - k - 1);
  }
  return p;
}

BiPoly hp2(const StructureConstants& L) {
  if (!is_filiform(L))
    throw Error("hp2 requires a filiform Lie algebra");
  return hilbert_polynomial(L).checked_minus(hp0(L.dim()));
}

std::set<std::pair<int, int>> support_estar(const StructureConstants& L) {
  return hilbert_polynomial(L).support();
}

} // namespace filiform
