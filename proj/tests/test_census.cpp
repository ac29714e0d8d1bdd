#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sbw/census.hpp"
#include "sbw/error.hpp"
#include "sbw/serialize.hpp"

using namespace sbw;

TEST_CASE("raw enumeration sizes are (2n)!") {
  EnumerateOptions raw;
  raw.up_to_iso = false;
  CHECK(enumerate_specs(1, raw).size() == 2);
  CHECK(enumerate_specs(2, raw).size() == 24);
  CHECK(enumerate_specs(3, raw).size() == 720);
}

TEST_CASE("both one-square specs satisfy the criterion") {
  EnumerateOptions raw;
  raw.up_to_iso = false;
  for (const SbwSpec& spec : enumerate_specs(1, raw)) {
    const CriterionReport r = criterion_check(spec);
    CHECK(r.verdict);
    CHECK(r.components[0].genus == 0);
  }
}

TEST_CASE("n=1 census has two classes") {
  const CensusRow row = census_report(1, {});
  CHECK(row.total_bijections == 2);
  REQUIRE(row.classes.size() == 2);
  for (const auto& cls : row.classes) {
    CHECK(cls.verdict);
    CHECK(cls.size == 1);
    CHECK(cls.genus_per_component == std::vector<int>{0});
    CHECK(cls.round_trip_ok == true);
    CHECK(cls.link_components == 1);
  }
}

TEST_CASE("n=2 census matches the worked examples") {
  const CensusRow row = census_report(2, {});
  CHECK(row.total_bijections == 24);

  long long size_sum = 0;
  bool saw_genus_one = false, saw_hopf = false;
  for (const auto& cls : row.classes) {
    size_sum += cls.size;
    for (const int g : cls.genus_per_component) CHECK((g == 0 || g == 1));
    CHECK((cls.chi == 4 || cls.chi == 2 || cls.chi == 0));
    if (cls.connected && cls.genus_per_component == std::vector<int>{1})
      saw_genus_one = true;
    if (cls.verdict && cls.link_components == 2) saw_hopf = true;
    if (cls.verdict) CHECK(cls.round_trip_ok == true);
  }
  CHECK(size_sum == row.total_bijections);
  CHECK(saw_genus_one);
  CHECK(saw_hopf);

  // The genus-one and Hopf examples appear as classes.
  const auto represented = [&](const SbwSpec& spec) {
    return std::any_of(row.classes.begin(), row.classes.end(),
                       [&](const CensusClass& cls) {
                         return isomorphic(cls.representative, spec);
                       });
  };
  CHECK(represented(fixtures::hopf()));
  CHECK(represented(fixtures::genus_one()));
}

TEST_CASE("canonical dedup agrees with explicit isomorphism search, n <= 2") {
  for (int n = 1; n <= 2; ++n) {
    EnumerateOptions raw;
    raw.up_to_iso = false;
    const std::vector<SbwSpec> all = enumerate_specs(n, raw);
    for (const SbwSpec& a : all)
      for (const SbwSpec& b : all) {
        const bool by_canon = canonical_form(a) == canonical_form(b);
        const bool by_search = oracle::find_isomorphism(a, b).has_value();
        CHECK(by_canon == by_search);
      }
  }
}

TEST_CASE("dedup keeps exactly one representative per search class") {
  EnumerateOptions iso;
  const std::vector<SbwSpec> reps = enumerate_specs(2, iso);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      CHECK_FALSE(oracle::find_isomorphism(reps[i], reps[j]).has_value());
  // Every raw spec is isomorphic to some representative.
  EnumerateOptions raw;
  raw.up_to_iso = false;
  for (const SbwSpec& spec : enumerate_specs(2, raw))
    CHECK(std::any_of(reps.begin(), reps.end(), [&](const SbwSpec& r) {
      return oracle::find_isomorphism(spec, r).has_value();
    }));
}

TEST_CASE("census output is deterministic") {
  const CensusRow a = census_report(2, {});
  const CensusRow b = census_report(2, {});
  CHECK(to_json(a) == to_json(b));
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i)
    CHECK(a.classes[i].representative.phi == b.classes[i].representative.phi);
}

TEST_CASE("caps reject oversized requests") {
  CHECK_THROWS_AS(census_report(5, {}), InvalidInput);
  EnumerateOptions raw;
  raw.up_to_iso = false;
  CHECK_THROWS_AS(enumerate_specs(4, raw), InvalidInput);
  CHECK_THROWS_AS(enumerate_specs(0, raw), InvalidInput);
  EnumerateOptions forced;
  forced.max_n = 9;  // clamped to the hard cap of 5
  CHECK_THROWS_AS(enumerate_specs(6, forced), InvalidInput);
}

TEST_CASE("the n=3 census covers the trefoil class") {
  EnumerateOptions opts;
  const CensusRow row = census_report(3, opts);
  CHECK(row.total_bijections == 720);
  bool saw_trefoil = false;
  long long sum = 0;
  for (const auto& cls : row.classes) {
    sum += cls.size;
    if (cls.verdict && isomorphic(cls.representative, fixtures::trefoil_spec()))
      saw_trefoil = true;
  }
  CHECK(sum == 720);
  CHECK(saw_trefoil);
}
