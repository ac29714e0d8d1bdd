#include "sbw/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sbw/diagram.hpp"
#include "sbw/error.hpp"

namespace sbw {

namespace {

constexpr int kDefaultIsoCap = 4;
constexpr int kDefaultRawCap = 3;
constexpr int kHardCap = 5;

int effective_cap(const EnumerateOptions& options) {
  if (options.max_n == 0) return options.up_to_iso ? kDefaultIsoCap : kDefaultRawCap;
  return std::min(options.max_n, kHardCap);
}

void check_cap(int n, const EnumerateOptions& options) {
  if (n < 1) throw InvalidInput("census needs n >= 1");
  const int cap = effective_cap(options);
  if (n > cap)
    throw InvalidInput("n=" + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(cap) +
                       (options.max_n == 0 ? " (raise it with --force, up to 5)" : ""));
}

void enumerate_raw(int n, const std::function<void(const SbwSpec&)>& visit) {
  // Sources are fixed in order 1.SE, 1.NW, 2.SE, ...; targets run over all
  // permutations of 1.SW, 1.NE, 2.SW, ... in lexicographic order.
  std::vector<int> target(2 * n);
  std::iota(target.begin(), target.end(), 0);
  SbwSpec spec;
  spec.n = n;
  spec.phi.resize(2 * n);
  do {
    for (int p = 0; p < 2 * n; ++p) spec.phi[p] = negative_corner(target[p]);
    visit(spec);
  } while (std::next_permutation(target.begin(), target.end()));
}

}  // namespace

void enumerate_specs(int n, const EnumerateOptions& options,
                     const std::function<void(const SbwSpec&)>& visit) {
  check_cap(n, options);
  if (!options.up_to_iso) {
    enumerate_raw(n, visit);
    return;
  }
  std::map<std::vector<std::uint8_t>, bool> seen;
  enumerate_raw(n, [&](const SbwSpec& spec) {
    auto [it, inserted] = seen.try_emplace(canonical_form(spec), true);
    if (inserted) visit(spec);
  });
}

std::vector<SbwSpec> enumerate_specs(int n, const EnumerateOptions& options) {
  std::vector<SbwSpec> out;
  enumerate_specs(n, options, [&](const SbwSpec& s) { out.push_back(s); });
  return out;
}

CensusRow census_report(int n, const EnumerateOptions& options) {
  check_cap(n, options);
  CensusRow row;
  row.n = n;
  row.total_bijections = 1;
  for (int k = 2; k <= 2 * n; ++k) row.total_bijections *= k;

  std::map<std::vector<std::uint8_t>, int> class_of;
  enumerate_raw(n, [&](const SbwSpec& spec) {
    auto [it, inserted] =
        class_of.try_emplace(canonical_form(spec), static_cast<int>(row.classes.size()));
    if (inserted) {
      CensusClass cls;
      cls.representative = spec;
      row.classes.push_back(std::move(cls));
    }
    row.classes[it->second].size += 1;
  });

  long long total = 0;
  for (auto& cls : row.classes) {
    total += cls.size;
    const CriterionReport report = criterion_check(cls.representative);
    cls.orbit_count = report.orbit_count;
    cls.verdict = report.verdict;
    cls.chi = report.chi;
    cls.connected = report.connected;
    for (const auto& comp : report.components)
      cls.genus_per_component.push_back(comp.genus);

    if (cls.verdict) {
      const ReconstructedDiagram rec = reconstruct_diagram(cls.representative);
      if (!rec.pd) throw std::logic_error("criterion class lost its PD code");
      cls.link_components = component_count(rec.diagram);
      cls.round_trip_ok = isomorphic(extract_sbw(rec.diagram), cls.representative);
      if (!*cls.round_trip_ok)
        throw std::logic_error("round trip failed for a criterion class");
    }
  }
  if (total != row.total_bijections)
    throw std::logic_error("class sizes do not sum to (2n)!");
  return row;
}

}  // namespace sbw
