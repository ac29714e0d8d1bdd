#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sbw/spec.hpp"

namespace sbw {

struct EnumerateOptions {
  bool up_to_iso = true;
  // 0 keeps the defaults: n <= 4 up to isomorphism, n <= 3 raw. The CLI
  // --force flag raises both to 5; (2n)! grows too fast beyond that.
  int max_n = 0;
};

// Visits all (2n)! pairings in lexicographic target order, or the first
// representative of each isomorphism class in that order. Deterministic.
// Throws InvalidInput when n exceeds the configured cap.
void enumerate_specs(int n, const EnumerateOptions& options,
                     const std::function<void(const SbwSpec&)>& visit);

// Convenience form collecting the stream.
std::vector<SbwSpec> enumerate_specs(int n, const EnumerateOptions& options);

struct CensusClass {
  SbwSpec representative;
  long long size = 0;  // raw bijections in the class
  int orbit_count = 0;
  bool verdict = false;
  int chi = 0;
  bool connected = false;
  std::vector<int> genus_per_component;
  // Set for criterion-satisfying classes: link components of the
  // reconstructed diagram, and whether re-extraction gave back the class.
  std::optional<int> link_components;
  std::optional<bool> round_trip_ok;
};

struct CensusRow {
  int n = 0;
  long long total_bijections = 0;  // (2n)!
  std::vector<CensusClass> classes;
};

// Classifies all pairings of n squares up to isomorphism and runs the
// criterion, surface construction, and (for criterion classes) the
// diagram round trip over every class.
CensusRow census_report(int n, const EnumerateOptions& options);

}  // namespace sbw
