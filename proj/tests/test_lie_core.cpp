#include <doctest.h>

#include <random>

#include "filiform/families.hpp"
#include "filiform/invariants.hpp"
#include "filiform/lie.hpp"

using namespace filiform;

namespace {

// n = 5 law {[e1,e_h] = e_{h-1}} with the spurious bracket [e4,e5] = e4.
StructureConstants corrupted_law_5() {
  StructureConstants L = model_algebra(5);
  L.set(4, 5, unit_vector(5, 4));
  return L;
}

QVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-4, 4);
  QVector v(n);
  for (auto& c : v)
    c = dist(rng);
  return v;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient, std::size_t gens) {
  std::vector<QVector> vectors;
  for (std::size_t g = 0; g < gens; ++g)
    vectors.push_back(random_vector(rng, ambient));
  return Subspace::span(vectors, ambient);
}

} // namespace

TEST_CASE("bracket on the model algebra") {
  StructureConstants g05 = model_algebra(5);
  CHECK(g05.bracket(unit_vector(5, 1), unit_vector(5, 4)) == unit_vector(5, 3));
  CHECK(g05.bracket(unit_vector(5, 2), unit_vector(5, 5)) == qvec_zero(5));
  CHECK(g05.bracket(unit_vector(5, 4), unit_vector(5, 1)) ==
        qvec_scale(-1, unit_vector(5, 3)));
}

TEST_CASE("bracket is alternating and bilinear on random inputs") {
  std::mt19937_64 rng(3);
  StructureConstants L = law_n2n2n(6, 1, 2, Rational(-1, 2));
  for (int trial = 0; trial < 25; ++trial) {
    QVector u = random_vector(rng, 6), v = random_vector(rng, 6), w = random_vector(rng, 6);
    CHECK(L.bracket(u, u) == qvec_zero(6));
    CHECK(L.bracket(u, v) == qvec_scale(-1, L.bracket(v, u)));
    Rational a(std::uniform_int_distribution<int>(-3, 3)(rng));
    QVector lhs = L.bracket(qvec_add(qvec_scale(a, u), w), v);
    QVector rhs = qvec_add(qvec_scale(a, L.bracket(u, v)), L.bracket(w, v));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("jacobi defect") {
  // (n-2,n-2,n) family member: a genuine Lie algebra
  StructureConstants good = law_n2n2n(6, 1, 0, 0);
  CHECK(good.jacobi_defect(4, 5, 6) == qvec_zero(6));
  CHECK(is_lie(good));

  StructureConstants model = model_algebra(7);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = j + 1; k <= 7; ++k)
        CHECK(model.jacobi_defect(i, j, k) == qvec_zero(7));

  StructureConstants bad = corrupted_law_5();
  CHECK(bad.jacobi_defect(1, 4, 5) == qvec_scale(-1, unit_vector(5, 3)));
  CHECK(!is_lie(bad));
  auto failure = find_jacobi_failure(bad);
  REQUIRE(failure.has_value());
  CHECK(failure->i == 1);
  CHECK(failure->j == 4);
  CHECK(failure->k == 5);

  CHECK_THROWS_AS(bad.jacobi_defect(4, 1, 5), Error);
}

TEST_CASE("subspace bracket") {
  StructureConstants g04 = model_algebra(4);
  Subspace whole = full_space(4);
  Subspace derived = subspace_bracket(g04, whole, whole);
  CHECK(derived == Subspace::span({unit_vector(4, 2), unit_vector(4, 3)}, 4));

  // [C^2, C^3] = <e2> for the n = 6 family member with alpha = 1
  StructureConstants L = law_n2n2n(6, 1, 0, 0);
  auto series = lower_central_series(L);
  CHECK(subspace_bracket(L, series.at(2), series.at(3)) ==
        Subspace::span({unit_vector(6, 2)}, 6));
  // symmetric as a subspace
  CHECK(subspace_bracket(L, series.at(3), series.at(2)) ==
        subspace_bracket(L, series.at(2), series.at(3)));
  // C^3 is abelian here (z2* = 3)
  CHECK(subspace_bracket(L, series.at(3), series.at(3)).is_zero());
}

TEST_CASE("lower central series") {
  StructureConstants g04 = model_algebra(4);
  auto series = lower_central_series(g04);
  REQUIRE(series.length() == 4);
  CHECK(series.nilpotent);
  CHECK(series.terms[0].dim() == 4);
  CHECK(series.terms[1].dim() == 2);
  CHECK(series.terms[2].dim() == 1);
  CHECK(series.terms[3].dim() == 0);

  // abelian algebra: C^2 = 0
  StructureConstants abelian(3);
  auto ab = lower_central_series(abelian);
  CHECK(ab.length() == 2);
  CHECK(ab.at(2).is_zero());

  // non-nilpotent table: [e1,e2] = e2 stabilizes above zero
  StructureConstants affine(2);
  affine.set(1, 2, unit_vector(2, 2));
  auto aff = lower_central_series(affine);
  CHECK(!aff.nilpotent);
  CHECK(aff.at(5).dim() == 1);
}

TEST_CASE("adapted laws have C^k = span{e2..e_{n-k+1}}") {
  for (const auto& L : {law_n2n2n(7, 2, 3, 1), law_n2n2n(9, 1, -1, 4),
                        law_z1_n2_n(4, 8, {1, 0}, 1, {0, 1, 2})}) {
    int n = L.dim();
    auto series = lower_central_series(L);
    for (int k = 2; k <= n - 1; ++k) {
      std::vector<QVector> gens;
      for (int h = 2; h <= n - k + 1; ++h)
        gens.push_back(unit_vector(static_cast<std::size_t>(n), h));
      CHECK(series.at(k) == Subspace::span(gens, static_cast<std::size_t>(n)));
    }
  }
}

TEST_CASE("bracket ideals respect the filtration degree") {
  for (const auto& L : {law_n2n2n(6, 1, 1, 0), law_n2n2n(8, 3, 2, -1),
                        law_z1_n2_n(4, 7, {2}, 3, {1, 1})}) {
    auto series = lower_central_series(L);
    int len = series.length();
    for (int k = 1; k <= len; ++k)
      for (int l = k; l <= len; ++l)
        CHECK(series.at(std::min(k + l, len))
                  .contains_subspace(subspace_bracket(L, series.at(k), series.at(l))));
    for (int k = 1; k + 1 <= len; ++k)
      CHECK(series.at(k).contains_subspace(series.at(k + 1)));
  }
}

TEST_CASE("abelian subspace tests") {
  StructureConstants L = law_n2n2n(6, 1, 0, 0);
  auto series = lower_central_series(L);
  CHECK(is_abelian_subspace(L, series.at(3)));
  CHECK(!is_abelian_subspace(L, series.at(2)));
  CHECK(is_abelian_subspace(L, Subspace::zero(6)));
}

TEST_CASE("centralizer") {
  StructureConstants g05 = model_algebra(5);
  CHECK(centralizer(g05, Subspace::zero(5)) == full_space(5));
  CHECK(centralizer(g05, Subspace::span({unit_vector(5, 2)}, 5)) == full_space(5));

  StructureConstants L = law_n2n2n(6, 1, 0, 0);
  auto series = lower_central_series(L);
  CHECK(centralizer(L, series.at(2)) ==
        Subspace::span({unit_vector(6, 2), unit_vector(6, 3)}, 6));
}

TEST_CASE("centralizer is antitone") {
  std::mt19937_64 rng(17);
  StructureConstants L = law_z1_n2_n(4, 8, {1, 2}, 2, {1, 0, 1});
  for (int trial = 0; trial < 15; ++trial) {
    Subspace s = random_subspace(rng, 8, 2);
    Subspace t = sum(s, random_subspace(rng, 8, 2)); // s inside t
    CHECK(centralizer(L, s).contains_subspace(centralizer(L, t)));
  }
}
