#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sbw/core_types.hpp"

namespace sbw {

// A set of n SBW squares together with the pairing phi from the 2n positive
// corners to the 2n negative corners. This is the whole input datum.
struct SbwSpec {
  int n = 0;
  // phi[positive_index(v)] = phi(v), always a negative corner.
  std::vector<CornerRef> phi;

  CornerRef phi_of(const CornerRef& pos) const { return phi[positive_index(pos)]; }
};

// Validates n >= 1, index ranges, corner classes, and bijectivity.
// Throws InvalidInput with a distinct message per violation.
void validate(const SbwSpec& spec);

// Builds a spec from (source, target) corner pairs and validates it.
SbwSpec make_spec(int n, const std::vector<std::pair<CornerRef, CornerRef>>& pairs);

// SBW spec text format, version 1. See parse_spec for the grammar.
std::string format_spec(const SbwSpec& spec);

// Parses the version-1 text format:
//   line 1: `sbw 1`
//   line 2: `n <count>`
//   then exactly 2n lines: `phi <sq>.<SE|NW> <sq>.<SW|NE>`
// '#' starts a comment; blank lines are ignored.
SbwSpec parse_spec(std::string_view text);

// The color-preserving edge permutation induced by phi.
struct EdgeBijection {
  int n = 0;
  // map[edge_index(e)] = psi(e)
  std::vector<EdgeRef> map;

  EdgeRef apply(const EdgeRef& e) const { return map[edge_index(e)]; }
};

// Checks bijectivity and color preservation; throws InvalidInput otherwise.
void validate(const EdgeBijection& psi);

// For an edge e with terminal corner v, psi(e) is the unique edge of the
// same color whose initial corner is phi(v).
EdgeBijection induced_edge_bijection(const SbwSpec& spec);

// Cycle decomposition of psi, split by color. Each cycle starts at its
// minimal edge (square index, then side order S < N < W < E) and follows
// psi; cycles are listed in order of their minimal edge.
struct OrbitDecomposition {
  std::vector<std::vector<EdgeRef>> black_orbits;
  std::vector<std::vector<EdgeRef>> white_orbits;

  int total() const {
    return static_cast<int>(black_orbits.size() + white_orbits.size());
  }
  std::vector<int> black_sizes() const;
  std::vector<int> white_sizes() const;
};

OrbitDecomposition orbit_decomposition(const EdgeBijection& psi);

// Connected piece of a spec: squares linked through phi.
struct ComponentReport {
  std::vector<int> squares;  // ascending
  int orbit_count = 0;
  int chi = 0;    // -n_c + orbit_count
  int genus = 0;  // (2 - chi) / 2
};

struct CriterionReport {
  int n = 0;
  int black_orbit_count = 0;
  int white_orbit_count = 0;
  int orbit_count = 0;
  bool verdict = false;  // orbit_count == n + 2
  int chi = 0;           // chi of the surface M: -n + orbit_count
  bool connected = false;
  std::vector<ComponentReport> components;
};

// The orbit-counting test: the spec describes an alternating link exterior
// complex exactly when the orbit count is n + 2.
CriterionReport criterion_check(const SbwSpec& spec);

// Minimal encoding of the spec over its isomorphism group: square
// relabelings combined with independent per-square 180-degree rotations.
// Two specs are isomorphic iff their canonical forms are equal.
// Exhaustive minimization; limited to n <= 8.
std::vector<std::uint8_t> canonical_form(const SbwSpec& spec);

bool isomorphic(const SbwSpec& a, const SbwSpec& b);

// Group action helpers, exposed for tests and the census.
//
// new_of_old[i-1] is the new index of old square i (a permutation of 1..n);
// rotate[i-1] says whether old square i is rotated 180 degrees.
SbwSpec apply_isomorphism(const SbwSpec& spec, const std::vector<int>& new_of_old,
                          const std::vector<bool>& rotate);

}  // namespace sbw
