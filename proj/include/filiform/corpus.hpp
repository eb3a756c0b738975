#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "filiform/families.hpp"

namespace filiform {

// hp3 = (hp_{3,5}, hp_{3,4}), hp2 = (hp_{2,6}, hp_{2,5}, hp_{2,4}, hp_{2,3})
struct HpVectors {
  std::vector<int> hp3;
  std::vector<int> hp2;
  bool operator==(const HpVectors&) const = default;
  bool operator<(const HpVectors& o) const {
    return std::tie(hp3, hp2) < std::tie(o.hp3, o.hp2);
  }
  std::string str() const;
};

// A Zariski locally closed piece of parameter space, with the data the
// reproduction run compares against.
struct Stratum {
  std::string case_id; // "4-5-8", "5-6-9", "5-7-10"
  std::string name;
  ParamSpec spec;
  std::vector<MPoly> closed;            // must vanish
  std::vector<std::vector<MPoly>> open; // tuples that must not vanish
  std::optional<BiPoly> expected_hp2;
  std::optional<BiPoly> expected_hp2_transcribed; // set when the transcribed reference form differs
  std::optional<HpVectors> expected_vectors;
  std::map<int, int> expected_theta; // k -> theta_k
  std::function<ParamValues(std::mt19937_64&)> sample;
};

// The reference component families of a case (used to decide whether a point
// lies off the whole variety).
struct ClosedSystem {
  std::string name;
  std::vector<MPoly> closed;
  std::vector<std::vector<MPoly>> open;
};

struct CaseFixture {
  std::string case_id;
  ParamSpec spec;
  std::vector<Stratum> strata;
  std::vector<ClosedSystem> components;
  std::vector<std::string> perturb_vars; // coordinates used to leave the variety
  int expected_distinct_hp = 0;          // distinct hp2 (or vector signatures)
};

CaseFixture case_fixture(const std::string& case_id);

// Deterministic rational point on the stratum: all closed equations hold and
// every open tuple is nonzero.  Throws if the search budget is exhausted.
ParamValues stratum_sample(const Stratum& stratum, std::uint64_t seed);

// A nearby point off the whole variety of the case: every component has a
// violated closed equation while the sampled open conditions still hold.
ParamValues perturb_off_variety(const CaseFixture& fixture, const ParamValues& point,
                                std::uint64_t seed);

// true iff all closed polynomials vanish and every open tuple is nonzero.
bool satisfies(const ClosedSystem& sys, const ParamSpec& spec, const ParamValues& point);

struct StratumResult {
  std::string name;
  std::string status; // PASS | FAIL | FIXTURE_DISAGREES
  std::vector<std::string> notes;
};

struct Report {
  std::string case_id;
  std::vector<StratumResult> strata;
  std::vector<std::string> summary;
  bool pass = true; // no FAIL rows (FIXTURE_DISAGREES rows are documented, not failed)
  bool clean = true; // no FAIL and no FIXTURE_DISAGREES

  std::string table() const;
};

Report reproduce(const std::string& case_id, std::uint64_t seed = 1, int samples = 3,
                 int jobs = 1);

// Closed-form Hilbert polynomial against the brute-force computation over
// the whole (z1, n) grid with z2 = n-2.
Report reproduce_z2eq(std::uint64_t seed = 1, int n_max = 13);

} // namespace filiform
