#include "filiform/paramlaw.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace filiform {

ParamSpec ParamSpec::make(int z1, int z2, int n) {
  if (!(4 <= z1 && z1 <= z2 && z2 <= n - 1))
    throw Error("param spec requires 4 <= z1 <= z2 <= n-1");
  return ParamSpec{z1, z2, n};
}

std::vector<std::pair<int, int>> ParamSpec::beta_indices() const {
  std::vector<std::pair<int, int>> idx;
  for (int l = 2; l <= n - z2; ++l)
    for (int k = 1; k < z2 - z1 + l; ++k)
      idx.push_back({k, l});
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::string alpha_name(int i) { return "a" + std::to_string(i); }
std::string gamma_name(int j) { return "g" + std::to_string(j); }
std::string beta_name(int k, int l) {
  return "b_" + std::to_string(k) + "_" + std::to_string(l);
}

SymbolicValues symbolic_values(const ParamSpec& spec) {
  SymbolicValues v;
  for (int i = 1; i <= spec.alpha_count(); ++i)
    v.alpha.push_back(MPoly::variable(alpha_name(i)));
  for (int j = 1; j <= spec.gamma_count(); ++j)
    v.gamma.push_back(MPoly::variable(gamma_name(j)));
  for (const auto& [k, l] : spec.beta_indices())
    v.beta[{k, l}] = MPoly::variable(beta_name(k, l));
  return v;
}

std::map<std::string, Rational> assignment_from_values(const ParamSpec& spec,
                                                       const ParamValues& values) {
  check_shapes(spec, values);
  std::map<std::string, Rational> a;
  for (int i = 1; i <= spec.alpha_count(); ++i)
    a[alpha_name(i)] = values.alpha[static_cast<std::size_t>(i - 1)];
  for (int j = 1; j <= spec.gamma_count(); ++j)
    a[gamma_name(j)] = values.gamma[static_cast<std::size_t>(j - 1)];
  for (const auto& [kl, b] : values.beta)
    a[beta_name(kl.first, kl.second)] = b;
  return a;
}

template <class S>
BracketTable<S> build_law(const ParamSpec& spec, const ParamValuesT<S>& values) {
  check_shapes(spec, values);
  const int n = spec.n, z1 = spec.z1, z2 = spec.z2;
  BracketTable<S> L(n);
  auto zero_vec = [n]() { return std::vector<S>(static_cast<std::size_t>(n)); };

  for (int h = 3; h <= n; ++h) {
    auto v = zero_vec();
    v[static_cast<std::size_t>(h - 2)] = S(1);
    L.set(1, h, std::move(v));
  }

  // [e_{z1+i}, e_{z2+1}] = alpha_1 e_{i+2} + ... + alpha_{i+1} e_2
  for (int i = 0; i <= z2 - z1; ++i) {
    auto v = zero_vec();
    for (int m = 1; m <= i + 1; ++m)
      v[static_cast<std::size_t>(i + 2 - m)] += values.alpha[static_cast<std::size_t>(m - 1)];
    L.set(z1 + i, z2 + 1, std::move(v));
  }

  // [e_{z1}, e_{z2+j}] = alpha_1 e_{j+1} + gamma_1 e_j + ... + gamma_{j-1} e_2
  for (int j = 2; j <= n - z2; ++j) {
    auto v = zero_vec();
    v[static_cast<std::size_t>(j)] += values.alpha[0];
    for (int m = 1; m <= j - 1; ++m)
      v[static_cast<std::size_t>(j - m)] += values.gamma[static_cast<std::size_t>(m - 1)];
    L.set(z1, z2 + j, std::move(v));
  }

  // recursion rows, in lexicographic (l, k) order so both references exist
  std::set<std::pair<int, int>> pending;
  for (int l = 2; l <= n - z2; ++l)
    for (int k = 1; k < z2 - z1 + l; ++k)
      pending.insert({z1 + k, z2 + l});
  auto read_pair = [&](int a, int b) -> std::vector<S> {
    if (a != b) {
      int lo = std::min(a, b), hi = std::max(a, b);
      if (pending.count({lo, hi}))
        throw Error("law recursion read an undefined bracket entry");
    }
    return L.bracket_basis(a, b);
  };

  for (int l = 2; l <= n - z2; ++l) {
    for (int k = 1; k < z2 - z1 + l; ++k) {
      auto w = read_pair(z1 + k - 1, z2 + l);
      auto w2 = read_pair(z1 + k, z2 + l - 1);
      for (std::size_t t = 0; t < w.size(); ++t)
        w[t] += w2[t];
      auto out = zero_vec();
      out[1] = values.beta.at({k, l});
      for (int h = 2; h <= k + l; ++h) {
        if (h > n)
          break; // P_h of an n-vector vanishes
        const S& c = w[static_cast<std::size_t>(h - 1)];
        if (ring_is_zero(c))
          continue;
        if (h + 1 > n)
          throw Error("law overflow: nonzero coefficient on e_" + std::to_string(h + 1) +
                      " in a " + std::to_string(n) + "-dimensional algebra");
        out[static_cast<std::size_t>(h)] += c;
      }
      pending.erase({z1 + k, z2 + l});
      L.set(z1 + k, z2 + l, std::move(out));
    }
  }
  return L;
}

template BracketTable<Rational> build_law<Rational>(const ParamSpec&,
                                                    const ParamValuesT<Rational>&);
template BracketTable<MPoly> build_law<MPoly>(const ParamSpec&, const ParamValuesT<MPoly>&);

ParamLaw build_symbolic_law(const ParamSpec& spec) {
  auto values = symbolic_values(spec);
  auto table = build_law(spec, values);
  return ParamLaw{spec, std::move(values), std::move(table)};
}

ConstraintSet jacobi_constraints(const ParamLaw& law) {
  bool symbolic = false;
  for (const auto& a : law.values.alpha)
    symbolic = symbolic || !a.is_constant();
  for (const auto& g : law.values.gamma)
    symbolic = symbolic || !g.is_constant();
  for (const auto& [kl, b] : law.values.beta)
    symbolic = symbolic || !b.is_constant();
  if (!symbolic)
    throw Error("jacobi_constraints: law has no symbolic parameters; "
                "use the plain Jacobi check instead");

  ConstraintSet cs;
  for (int i = 1; i <= law.spec.alpha_count(); ++i)
    cs.variables.push_back(alpha_name(i));
  for (int j = 1; j <= law.spec.gamma_count(); ++j)
    cs.variables.push_back(gamma_name(j));
  for (const auto& [k, l] : law.spec.beta_indices())
    cs.variables.push_back(beta_name(k, l));

  const int n = law.spec.n;
  std::set<std::string> seen;
  for (int q = 1; q <= n; ++q)
    for (int r = q + 1; r <= n; ++r)
      for (int u = r + 1; u <= n; ++u) {
        auto defect = law.table.jacobi_defect(q, r, u);
        for (const auto& coord : defect) {
          if (coord.is_zero())
            continue;
          MPoly p = coord.primitive();
          if (seen.insert(p.str()).second)
            cs.closed.push_back(std::move(p));
        }
      }

  auto tuple_of = [](const std::vector<MPoly>& v) {
    std::vector<MPoly> tuple;
    for (const auto& c : v)
      if (!c.is_zero())
        tuple.push_back(c);
    return tuple;
  };
  cs.open.push_back(tuple_of(law.table.entry(law.spec.z1, n)));
  cs.open.push_back(tuple_of(law.table.entry(law.spec.z2, law.spec.z2 + 1)));
  return cs;
}

std::pair<ParamValues, QMatrix> rescale(const ParamSpec& spec, const ParamValues& values,
                                        const Rational& lambda) {
  if (lambda == 0)
    throw Error("rescale requires lambda != 0");
  check_shapes(spec, values);
  ParamValues scaled = scale_values(values, lambda);
  QMatrix m(static_cast<std::size_t>(spec.n), static_cast<std::size_t>(spec.n));
  m.at(0, 0) = 1;
  for (std::size_t h = 1; h < static_cast<std::size_t>(spec.n); ++h)
    m.at(h, h) = lambda;
  return {std::move(scaled), std::move(m)};
}

ParamValues normalize(const ParamValues& values) {
  if (!values.alpha.empty() && values.alpha[0] != 0)
    return scale_values(values, Rational(1) / values.alpha[0]);
  for (const auto& g : values.gamma)
    if (g != 0)
      return scale_values(values, Rational(1) / g);
  throw Error("normalize: alpha_1 = 0 and every gamma vanishes; no normalizer exists");
}

std::string constraints_text(const ConstraintSet& cs) {
  std::ostringstream os;
  os << "# variables:";
  for (const auto& v : cs.variables)
    os << " " << v;
  os << "\n";
  os << "# closed conditions, one polynomial per line (each must vanish):\n";
  for (const auto& p : cs.closed)
    os << p.str() << "\n";
  if (cs.closed.empty())
    os << "# (none)\n";
  os << "# open conditions (each tuple must not vanish identically):\n";
  for (const auto& tuple : cs.open) {
    os << "# nonzero:";
    for (std::size_t i = 0; i < tuple.size(); ++i)
      os << (i ? ", " : " ") << tuple[i].str();
    os << "\n";
  }
  return os.str();
}

} // namespace filiform
