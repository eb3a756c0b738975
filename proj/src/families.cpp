#include "filiform/families.hpp"

namespace filiform {

int family_p(int z1, int n) { return (n - z1 - 1) / 2; }

bool verify_isomorphism(const QMatrix& m, const StructureConstants& source,
                        const StructureConstants& target) {
  int n = source.dim();
  if (target.dim() != n)
    throw DimensionMismatch("verify_isomorphism: algebras have different dimensions");
  if (m.rows != static_cast<std::size_t>(n) || m.cols != static_cast<std::size_t>(n))
    throw DimensionMismatch("verify_isomorphism: matrix shape mismatch");
  if (!inverse(m))
    return false;
  for (int i = 1; i <= n; ++i) {
    QVector mi = m.column(static_cast<std::size_t>(i - 1));
    for (int j = i + 1; j <= n; ++j) {
      QVector mj = m.column(static_cast<std::size_t>(j - 1));
      QVector lhs = m.apply(source.entry(i, j));
      QVector rhs = target.bracket(mi, mj);
      if (lhs != rhs)
        return false;
    }
  }
  return true;
}

StructureConstants law_n2n2n(int n, const Rational& a, const Rational& g, const Rational& b) {
  if (n < 6)
    throw Error("law_n2n2n requires n >= 6");
  if (a == 0)
    throw Error("law_n2n2n: open restriction alpha != 0 violated");
  ParamSpec spec = ParamSpec::make(n - 2, n - 2, n);
  ParamValues values;
  values.alpha = {a};
  values.gamma = {g};
  values.beta[{1, 2}] = b;
  return build_law(spec, values);
}

namespace {

// Change of basis for the two-class classification, gamma != 0 case:
// e'_1 = g e1, e'_2 = g^{2n-7} e2, e'_3 = g^{2n-8} e3,
// e'_k = g^{2n-k-5} (b/2) e_{k-2} + g^{2n-k-5} e_k  (4 <= k <= n).
// Conjugates the canonical law (1,1,0) onto (1,g,b).
QMatrix two_class_map_gamma(int n, const Rational& g, const Rational& b) {
  std::size_t un = static_cast<std::size_t>(n);
  QMatrix m(un, un);
  m.at(0, 0) = g;
  m.at(1, 1) = rat_pow(g, static_cast<unsigned>(2 * n - 7));
  m.at(2, 2) = rat_pow(g, static_cast<unsigned>(2 * n - 8));
  for (int k = 4; k <= n; ++k) {
    Rational scale = rat_pow(g, static_cast<unsigned>(2 * n - k - 5));
    m.at(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1)) = scale;
    m.at(static_cast<std::size_t>(k - 3), static_cast<std::size_t>(k - 1)) = scale * b / 2;
  }
  return m;
}

// gamma = 0 case: e'_i = e_i (i <= 3), e'_k = (b/2) e_{k-2} + e_k.
// Conjugates the canonical law (1,0,0) onto (1,0,b).
QMatrix two_class_map_beta(int n, const Rational& b) {
  std::size_t un = static_cast<std::size_t>(n);
  QMatrix m = QMatrix::identity(un);
  for (int k = 4; k <= n; ++k)
    m.at(static_cast<std::size_t>(k - 3), static_cast<std::size_t>(k - 1)) = b / 2;
  return m;
}

} // namespace

ClassifyResult classify_n2n2n(int n, const Rational& a, const Rational& g, const Rational& b) {
  StructureConstants input = law_n2n2n(n, a, g, b);
  ParamSpec spec = ParamSpec::make(n - 2, n - 2, n);
  ParamValues values;
  values.alpha = {a};
  values.gamma = {g};
  values.beta[{1, 2}] = b;

  auto [scaled, m_rescale] = rescale(spec, values, Rational(1) / a);
  Rational g1 = scaled.gamma[0];
  Rational b1 = scaled.beta.at({1, 2});

  int class_id = g1 != 0 ? 1 : 2;
  StructureConstants canonical = law_n2n2n(n, 1, class_id == 1 ? 1 : 0, 0);
  QMatrix phi = class_id == 1 ? two_class_map_gamma(n, g1, b1) : two_class_map_beta(n, b1);
  // m_rescale * phi maps the canonical law onto the input; invert it
  auto inv = inverse(m_rescale * phi);
  if (!inv)
    throw Error("classify_n2n2n: change of basis is singular");
  if (!verify_isomorphism(*inv, input, canonical))
    throw Error("classify_n2n2n: isomorphism check failed");
  return ClassifyResult{class_id, std::move(canonical), std::move(*inv)};
}

namespace {

ParamValues z1_n2_n_values(int z1, int n, const std::vector<Rational>& alpha_tail,
                           const Rational& gamma1, const std::vector<Rational>& beta) {
  int p = family_p(z1, n);
  int alpha_len = n - z1 - 1;
  if (static_cast<int>(alpha_tail.size()) != alpha_len - p)
    throw Error("alpha_tail must list alpha_{p+1}..alpha_{n-z1-1}");
  if (static_cast<int>(beta.size()) != alpha_len)
    throw Error("beta must list beta_{k,2} for k = 1..n-z1-1");
  ParamValues values;
  values.alpha.assign(static_cast<std::size_t>(p), Rational(0));
  values.alpha.insert(values.alpha.end(), alpha_tail.begin(), alpha_tail.end());
  values.gamma = {gamma1};
  for (int k = 1; k <= alpha_len; ++k)
    values.beta[{k, 2}] = beta[static_cast<std::size_t>(k - 1)];
  return values;
}

int first_nonzero(const std::vector<Rational>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0)
      return static_cast<int>(i);
  return -1;
}

} // namespace

StructureConstants law_z1_n2_n(int z1, int n, const std::vector<Rational>& alpha_tail,
                               const Rational& gamma1, const std::vector<Rational>& beta) {
  if (!(4 <= z1 && z1 <= n - 3 && n >= 7))
    throw Error("law_z1_n2_n requires 4 <= z1 <= n-3 and n >= 7");
  if (gamma1 == 0)
    throw Error("law_z1_n2_n: open restriction gamma_1 != 0 violated");
  if (first_nonzero(alpha_tail) < 0)
    throw Error("law_z1_n2_n: open restriction alpha_tail != 0 violated");
  ParamSpec spec = ParamSpec::make(z1, n - 2, n);
  return build_law(spec, z1_n2_n_values(z1, n, alpha_tail, gamma1, beta));
}

BiPoly hp_closed_form(int z1, int n, const std::vector<Rational>& alpha_tail) {
  if (!(4 <= z1 && z1 <= n - 3 && n >= 7))
    throw Error("hp_closed_form requires 4 <= z1 <= n-3 and n >= 7");
  int p = family_p(z1, n);
  if (static_cast<int>(alpha_tail.size()) != n - z1 - 1 - p)
    throw Error("alpha_tail must list alpha_{p+1}..alpha_{n-z1-1}");
  int r0 = first_nonzero(alpha_tail);
  if (r0 < 0)
    throw Error("hp_closed_form: alpha_tail must not vanish identically");
  int zs = star(z1, n);
  BiPoly hp = hp0(n);
  int d22 = zs - p - 2 - r0;
  hp.add(2, 2, d22);
  hp.add(2, 3, d22);
  hp.add(3, 2, d22);
  for (int l = 4; l <= zs - p; ++l) {
    int d = zs - p - l + 1 - r0;
    if (d <= 0)
      continue;
    hp.add(2, l, d);
    hp.add(l, 2, d);
  }
  return hp;
}

int theta2_closed(int z1, int n, const std::vector<Rational>& alpha_tail) {
  if (!(4 <= z1 && z1 <= n - 3 && n >= 7))
    throw Error("theta2_closed requires 4 <= z1 <= n-3 and n >= 7");
  int p = family_p(z1, n);
  if (static_cast<int>(alpha_tail.size()) != n - z1 - 1 - p)
    throw Error("alpha_tail must list alpha_{p+1}..alpha_{n-z1-1}");
  int r0 = first_nonzero(alpha_tail);
  if (r0 < 0)
    throw Error("theta2_closed: alpha_tail must not vanish identically");
  int zs = star(z1, n);
  int theta2 = zs - p - r0 + 1;
  int d22 = zs - p - 2 - r0;
  if (theta2 != d22 + 3)
    throw Error("theta2_closed: the two closed forms disagree");
  return theta2;
}

int count_hp_classes(int z1, int n) {
  if (z1 >= n - 2)
    throw Error("count_hp_classes requires z1 < n-2");
  return n - z1 - family_p(z1, n) - 1;
}

std::pair<QMatrix, ParamValues> iso_reduce_nq(int n, int q, const ParamValues& values) {
  if (!(3 <= q && q <= n - 4 && n >= 7))
    throw Error("iso_reduce_nq requires 3 <= q <= n-4 and n >= 7");
  ParamSpec spec = ParamSpec::make(n - q, n - 2, n);
  check_shapes(spec, values);
  if (values.alpha.size() < 2 || values.alpha[1] == 0)
    throw Error("iso_reduce_nq requires alpha_2 != 0");
  Rational c = values.beta.at({q - 1, 2}) / (Rational(q - 1) * values.alpha[1]);

  std::size_t un = static_cast<std::size_t>(n);
  QMatrix m = QMatrix::identity(un);
  for (int j = q + 1; j <= n; ++j)
    m.at(static_cast<std::size_t>(j - q), static_cast<std::size_t>(j - 1)) = c;

  ParamValues reduced = values;
  reduced.beta[{q - 1, 2}] = 0;
  return {std::move(m), std::move(reduced)};
}

} // namespace filiform
