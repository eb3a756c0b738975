// Acceptance suite: runs every contract criterion end to end and prints one
// PASS/FAIL line per criterion.  All comparisons are exact; there are no
// tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "filiform/corpus.hpp"
#include "filiform/families.hpp"
#include "filiform/invariants.hpp"
#include "filiform/json_io.hpp"

using namespace filiform;

namespace {

struct Checker {
  int failures = 0;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (notes.size() < 8)
        notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back("note: " + what); }
};

// every algebra generated while running criteria 1-6; criterion 7 replays
// the structural property suite over all of them
std::vector<StructureConstants> registry;

Rational rand_rat(std::mt19937_64& rng, int bound = 5) {
  return Rational(std::uniform_int_distribution<int>(-bound, bound)(rng));
}

Rational rand_nonzero(std::mt19937_64& rng, int bound = 5) {
  for (;;) {
    Rational r = rand_rat(rng, bound);
    if (r != 0)
      return r;
  }
}

void criterion1(Checker& c) {
  for (int n = 2; n <= 12; ++n) {
    StructureConstants m = model_algebra(n);
    registry.push_back(m);
    c.require(hilbert_polynomial(m) == hp0(n),
              "HP(model " + std::to_string(n) + ") != hp0");
    // frozen from the oracle: every bracket of the model involves e1, and
    // C^k excludes e1 for k >= 2, so [C^k, C^l] = 0 for k, l >= 2 and
    // [C^k, C^1] = C^{k+1}; hence theta = (n-1, 2, ..., 2, 1)
    std::vector<int> expected;
    for (int k = 1; k <= n - 1; ++k)
      expected.push_back(k == 1 ? n - 1 : (k == n - 1 ? 1 : 2));
    c.require(theta_vector(m).entries == expected,
              "theta(model " + std::to_string(n) + ") != oracle value");
  }
  c.note("theta(model) frozen from the oracle as (n-1, 2, ..., 2, 1): every model "
         "bracket involves e1, so [C^k, C^l] = 0 once k, l >= 2 (forced by HP = hp0)");
}

void criterion2(Checker& c) {
  std::mt19937_64 rng(101);
  BiPoly expected;
  expected.set(2, 2, 1);
  expected.set(2, 3, 1);
  expected.set(3, 2, 1);
  for (int n = 6; n <= 12; ++n) {
    std::set<int> classes;
    std::set<std::string> hps;
    for (int trial = 0; trial < 20; ++trial) {
      Rational a = rand_nonzero(rng);
      Rational g = trial % 2 ? rand_nonzero(rng) : Rational(0);
      Rational b = rand_rat(rng);
      StructureConstants L = law_n2n2n(n, a, g, b);
      registry.push_back(L);
      c.require(hp2(L) == expected, "hp2 of (n-2,n-2,n) wrong at n=" + std::to_string(n));
      hps.insert(hp2(L).str());
      auto result = classify_n2n2n(n, a, g, b);
      classes.insert(result.class_id);
      c.require(verify_isomorphism(result.iso, L, result.canonical),
                "classification map not bracket-preserving at n=" + std::to_string(n));
    }
    c.require(classes == std::set<int>{1, 2},
              "both isomorphism classes must occur at n=" + std::to_string(n));
    c.require(hps.size() == 1, "HP must not separate the two classes");
  }
}

void criterion3(Checker& c) {
  std::mt19937_64 rng(103);
  for (int n = 7; n <= 13; ++n)
    for (int z1 = 4; z1 <= n - 3; ++z1) {
      int p = family_p(z1, n);
      int tail_len = n - z1 - 1 - p;
      std::set<std::string> distinct;
      for (int r0 = 0; r0 < tail_len; ++r0) {
        std::vector<Rational> tail(static_cast<std::size_t>(tail_len), Rational(0));
        tail[static_cast<std::size_t>(r0)] = rand_nonzero(rng);
        for (int t = r0 + 1; t < tail_len; ++t)
          tail[static_cast<std::size_t>(t)] = rand_rat(rng);
        std::vector<Rational> beta;
        for (int k = 0; k < n - z1 - 1; ++k)
          beta.push_back(rand_rat(rng));
        StructureConstants L = law_z1_n2_n(z1, n, tail, rand_nonzero(rng), beta);
        registry.push_back(L);
        BiPoly brute = hilbert_polynomial(L);
        c.require(brute == hp_closed_form(z1, n, tail),
                  "closed form != brute force at (z1,n)=(" + std::to_string(z1) + "," +
                      std::to_string(n) + "), r0=" + std::to_string(r0));
        distinct.insert(brute.str());
      }
      c.require(static_cast<int>(distinct.size()) == count_hp_classes(z1, n),
                "class count wrong at (z1,n)=(" + std::to_string(z1) + "," +
                    std::to_string(n) + ")");
    }
}

void criterion4(Checker& c) {
  CaseFixture f = case_fixture("4-5-8");
  std::set<std::string> hps;
  std::set<std::set<std::pair<int, int>>> estars;
  for (const auto& stratum : f.strata) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      StructureConstants L = build_law(f.spec, stratum_sample(stratum, seed));
      registry.push_back(L);
      BiPoly h2 = hp2(L);
      hps.insert(h2.str());
      estars.insert(support_estar(L));
      c.require(h2 == *stratum.expected_hp2, "hp2 mismatch on " + stratum.name);
      ThetaVector theta = theta_vector(L);
      c.require(theta.entries[1] == 6 && theta.entries[2] == 5,
                "theta_2/theta_3 mismatch on " + stratum.name);
      // the two strata differ exactly in the coefficient of
      // t^2 s^2 + t^2 s^3 + t^3 s^2 (2 on U', 1 on Z')
      int head = stratum.name == "U'" ? 2 : 1;
      for (auto [k, l] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}})
        c.require(h2.get(k, l) == head, "head coefficient mismatch on " + stratum.name);
      // brute force resolves the transcribed t^3 s^4 duplication to t^4 s^3
      c.require(h2.get(3, 4) == 1 && h2.get(4, 3) == 1,
                "top-degree group must be symmetric with coefficient 1");
      c.require(!(h2 == *stratum.expected_hp2_transcribed),
                "the literal transcribed polynomial is not symmetric and must differ");
    }
  }
  c.require(hps.size() == 2, "exactly two HP^(2) polynomials expected");
  c.require(estars.size() == 1, "E* must coincide across U' and Z'");
  c.note("transcribed (4,5,8) top group 't^2s^5+t^3s^4+t^3s^4+t^5s^2' resolved by brute "
         "force to coefficient 1 on each of t^2s^5, t^3s^4, t^4s^3, t^5s^2");
}

void criterion5(Checker& c) {
  CaseFixture f = case_fixture("5-6-9");
  std::set<std::string> hps;
  for (const auto& stratum : f.strata)
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      StructureConstants L = build_law(f.spec, stratum_sample(stratum, seed));
      registry.push_back(L);
      BiPoly h2 = hp2(L);
      hps.insert(h2.str());
      c.require(h2 == *stratum.expected_hp2,
                "hp2 differs from the reference polynomial on " + stratum.name);
    }
  c.require(hps.size() == 1, "both branches must share one HP^(2)");
}

void criterion6(Checker& c) {
  CaseFixture f = case_fixture("5-7-10");
  std::set<HpVectors> signatures;
  for (const auto& stratum : f.strata)
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      StructureConstants L = build_law(f.spec, stratum_sample(stratum, seed));
      registry.push_back(L);
      BiPoly h2 = hp2(L);
      HpVectors got{{h2.get(3, 5), h2.get(3, 4)},
                    {h2.get(2, 6), h2.get(2, 5), h2.get(2, 4), h2.get(2, 3)}};
      signatures.insert(got);
      c.require(got == *stratum.expected_vectors,
                "hp3/hp2 vectors mismatch on " + stratum.name + ": got " + got.str());
    }
  c.require(signatures.size() == 6, "exactly 6 distinct signatures expected, got " +
                                        std::to_string(signatures.size()));
}

void criterion7(Checker& c) {
  int checked = 0;
  for (const auto& L : registry) {
    int n = L.dim();
    auto series = lower_central_series(L);
    BiPoly hp = hilbert_polynomial(L);

    c.require(hp.is_symmetric(), "HP symmetry");
    for (const auto& [kl, coeff] : hp.coeffs()) {
      if (kl.first > 1)
        c.require(hp.get(kl.first - 1, kl.second) >= coeff, "arrow monotonicity");
      if (kl.second > 1)
        c.require(hp.get(kl.first, kl.second - 1) >= coeff, "arrow monotonicity");
    }
    for (int k = 2; k + 1 <= n; ++k)
      c.require(hp.get(k, k) == hp.get(k + 1, k) && hp.get(k, k) == hp.get(k, k + 1),
                "triple-coefficient identity");

    if (!is_model(L)) {
      Triple t = invariants_adapted(L);
      c.require(t.bounds_ok(), "triple bounds");
    }

    c.require(is_adapted(L), "registry algebras are adapted");
    for (int k = 2; k <= n - 1; ++k) {
      std::vector<QVector> gens;
      for (int h = 2; h <= n - k + 1; ++h)
        gens.push_back(unit_vector(static_cast<std::size_t>(n), h));
      c.require(series.at(k) == Subspace::span(gens, static_cast<std::size_t>(n)),
                "C^k = span{e2..e_{n-k+1}}");
    }

    // [C^k, C^l] = 0 is contained everywhere, so only the support of HP
    // needs an explicit containment check
    int len = series.length();
    for (const auto& [kl, coeff] : hp.coeffs())
      if (kl.first <= kl.second)
        c.require(series.at(std::min(kl.first + kl.second, len))
                      .contains_subspace(
                          subspace_bracket(L, series.at(kl.first), series.at(kl.second))),
                  "[C^k, C^l] inside C^{k+l}");

    ThetaVector theta = theta_vector(L);
    auto estar = hp.support();
    for (int k = 1; k <= static_cast<int>(theta.entries.size()); ++k) {
      int t = theta.entries[static_cast<std::size_t>(k - 1)];
      c.require(!estar.count({k, t}), "theta/E* consistency (outside)");
      c.require(t == 1 || estar.count({k, t - 1}), "theta/E* consistency (inside)");
    }

    if (n >= 5 && n % 2 == 1)
      c.require(subspace_bracket(L, series.at(2), series.at(n - 3)).is_zero(),
                "odd-n vanishing of [C^2, C^{n-3}]");
    ++checked;
  }
  c.note(std::to_string(checked) + " generated algebras checked");
}

void criterion8(Checker& c) {
  std::mt19937_64 rng(108);
  std::vector<ParamSpec> specs;
  for (int n = 6; n <= 10; ++n)
    for (int z2 = 4; z2 <= n - 1; ++z2)
      for (int z1 = 4; z1 <= z2; ++z1)
        if (z1 + z2 >= n) // keeps the recursion inside e_2..e_n for all values
          specs.push_back(ParamSpec::make(z1, z2, n));
  for (int trial = 0; trial < 50; ++trial) {
    const ParamSpec& spec = specs[trial % specs.size()];
    ParamValues v;
    for (int i = 0; i < spec.alpha_count(); ++i)
      v.alpha.push_back(rand_rat(rng));
    for (int j = 0; j < spec.gamma_count(); ++j)
      v.gamma.push_back(rand_rat(rng));
    for (const auto& kl : spec.beta_indices())
      v.beta[kl] = rand_rat(rng);
    if (v.alpha[0] == 0 && trial % 2)
      v.alpha[0] = rand_nonzero(rng);
    Rational lambda = rand_nonzero(rng);
    auto [scaled, m] = rescale(spec, v, lambda);
    StructureConstants original = build_law(spec, v);
    StructureConstants rescaled = build_law(spec, scaled);
    c.require(verify_isomorphism(m, rescaled, original),
              "rescale change of basis must conjugate the laws");
    if (is_nilpotent(original))
      c.require(hilbert_polynomial(original) == hilbert_polynomial(rescaled),
                "HP must be invariant under rescaling");
    bool normalizable = v.alpha[0] != 0;
    for (const auto& g : v.gamma)
      normalizable = normalizable || g != 0;
    if (normalizable) {
      ParamValues norm = normalize(v);
      c.require(normalize(norm) == norm, "normalize must be idempotent");
    }
  }
}

void criterion9(Checker& c) {
  std::mt19937_64 rng(109);
  // two-class classification maps, both cases
  for (int n = 6; n <= 10; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      Rational a = rand_nonzero(rng);
      Rational g = rand_nonzero(rng);
      Rational b = rand_rat(rng);
      auto with_gamma = classify_n2n2n(n, a, g, b);
      c.require(with_gamma.class_id == 1, "gamma != 0 must land in class 1");
      c.require(verify_isomorphism(with_gamma.iso, law_n2n2n(n, a, g, b), with_gamma.canonical),
                "class-1 map must be bracket-preserving");
      auto without_gamma = classify_n2n2n(n, a, 0, b);
      c.require(without_gamma.class_id == 2, "gamma = 0 must land in class 2");
      c.require(
          verify_isomorphism(without_gamma.iso, law_n2n2n(n, a, 0, b), without_gamma.canonical),
          "class-2 map must be bracket-preserving");
    }
  // beta-removal maps for (n-q, n-2, n), q = 3..5 (q = 3 is the (n-3) map)
  for (int n = 8; n <= 11; ++n)
    for (int q = 3; q <= std::min(5, n - 4); ++q)
      for (int trial = 0; trial < 5; ++trial) {
        ParamSpec spec = ParamSpec::make(n - q, n - 2, n);
        ParamValues v;
        v.alpha.assign(static_cast<std::size_t>(spec.alpha_count()), Rational(0));
        v.alpha[1] = rand_nonzero(rng);
        for (std::size_t i = 2; i < v.alpha.size(); ++i)
          v.alpha[i] = rand_rat(rng);
        v.gamma = {Rational(1)};
        for (const auto& kl : spec.beta_indices())
          v.beta[kl] = rand_rat(rng);
        auto [m, reduced] = iso_reduce_nq(n, q, v);
        c.require(verify_isomorphism(m, build_law(spec, reduced), build_law(spec, v)),
                  "beta-removal map must conjugate the laws at (n,q)=(" +
                      std::to_string(n) + "," + std::to_string(q) + ")");
      }
}

void criterion10(Checker& c) {
  for (const char* id : {"4-5-8", "5-6-9", "5-7-10"}) {
    CaseFixture f = case_fixture(id);
    int on_ok = 0, off_ok = 0;
    for (int s = 0; s < 32; ++s) {
      const Stratum& stratum = f.strata[static_cast<std::size_t>(s) % f.strata.size()];
      ParamValues point = stratum_sample(stratum, static_cast<std::uint64_t>(200 + s));
      if (is_lie(build_law(f.spec, point)))
        ++on_ok;
      ParamValues off = perturb_off_variety(f, point, static_cast<std::uint64_t>(300 + s));
      if (!is_lie(build_law(f.spec, off)))
        ++off_ok;
    }
    c.require(on_ok == 32, std::string(id) + ": all 32 variety points must satisfy Jacobi");
    c.require(off_ok == 32, std::string(id) + ": all 32 off-variety points must fail Jacobi");
  }
}

} // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Checker&)> run;
  };
  std::vector<Entry> criteria = {
      {1, "model baseline: HP = hp0 and oracle theta vector, n = 2..12", criterion1},
      {2, "(n-2,n-2,n): hp2 = t^2s^2+t^2s^3+t^3s^2 and the two certified classes", criterion2},
      {3, "closed-form HP oracle equivalence and class counts over the (z1,n) grid", criterion3},
      {4, "(4,5,8): two HP^(2) classes, equal E*, theta, typo resolution", criterion4},
      {5, "(5,6,9): both branches share the reference HP^(2)", criterion5},
      {6, "(5,7,10): reference hp3/hp2 vectors and 6 distinct signatures", criterion6},
      {7, "structural property suite over every generated algebra", criterion7},
      {8, "rescaling: certified isomorphism, HP invariance, normalize idempotent", criterion8},
      {9, "explicit isomorphism certificates at random parameter points", criterion9},
      {10, "constraint soundness: 32 points on and off each variety", criterion10},
  };

  int failed = 0;
  for (auto& entry : criteria) {
    auto start = std::chrono::steady_clock::now();
    Checker checker;
    entry.run(checker);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    bool ok = checker.failures == 0;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << entry.id << ": " << entry.title
              << " (" << ms << " ms)\n";
    for (const auto& note : checker.notes)
      std::cout << "       " << note << "\n";
    if (!ok)
      std::cout << "       " << checker.failures << " failed checks\n";
  }
  std::cout << (failed == 0 ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: " + std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
