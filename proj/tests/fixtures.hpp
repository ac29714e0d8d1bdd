// Named small specs and diagrams used across the test suites.
#pragma once

#include <string>

#include "sbw/spec.hpp"

namespace fixtures {

using sbw::Corner;
using sbw::CornerRef;

// n=1, phi = {1.SE->1.SW, 1.NW->1.NE}: psi fixes both black edges and
// swaps the white ones. Criterion holds (3 = 1 + 2).
inline sbw::SbwSpec one_a() {
  return sbw::make_spec(1, {{{1, Corner::SE}, {1, Corner::SW}},
                            {{1, Corner::NW}, {1, Corner::NE}}});
}

// n=1, phi = {1.SE->1.NE, 1.NW->1.SW}: the other one-square spec.
inline sbw::SbwSpec one_b() {
  return sbw::make_spec(1, {{{1, Corner::SE}, {1, Corner::NE}},
                            {{1, Corner::NW}, {1, Corner::SW}}});
}

// n=2 criterion spec (the Hopf link): orbits 4 = 2 + 2.
inline sbw::SbwSpec hopf() {
  return sbw::make_spec(2, {{{1, Corner::SE}, {2, Corner::SW}},
                            {{1, Corner::NW}, {2, Corner::NE}},
                            {{2, Corner::SE}, {1, Corner::SW}},
                            {{2, Corner::NW}, {1, Corner::NE}}});
}

// n=2 spec with a single black and a single white orbit: orbits 2, the
// surface M is a torus.
inline sbw::SbwSpec genus_one() {
  return sbw::make_spec(2, {{{1, Corner::SE}, {2, Corner::SW}},
                            {{1, Corner::NW}, {2, Corner::NE}},
                            {{2, Corner::SE}, {1, Corner::NE}},
                            {{2, Corner::NW}, {1, Corner::SW}}});
}

// The standard trefoil PD code.
inline std::string trefoil_pd() {
  return "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n";
}

// A 2-crossing Hopf link diagram.
inline std::string hopf_pd() { return "X 1 3 2 4\nX 3 1 4 2\n"; }

// The 1-crossing unknot curl.
inline std::string curl_pd() { return "X 1 1 2 2\n"; }

// Spec extracted from the trefoil by hand.
inline sbw::SbwSpec trefoil_spec() {
  return sbw::make_spec(3, {{{1, Corner::SE}, {2, Corner::SW}},
                            {{1, Corner::NW}, {3, Corner::NE}},
                            {{2, Corner::SE}, {3, Corner::SW}},
                            {{2, Corner::NW}, {1, Corner::NE}},
                            {{3, Corner::SE}, {1, Corner::SW}},
                            {{3, Corner::NW}, {2, Corner::NE}}});
}

}  // namespace fixtures
