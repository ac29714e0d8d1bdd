#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbw/spec.hpp"
#include "sbw/surface.hpp"

namespace sbw {

// Planar diagram code: one 4-tuple of arc labels per crossing, listed
// counterclockwise starting at the incoming under-strand germ.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
};

// Parses `X a b c d` lines; '#' comments and blank lines are ignored.
// Rejects wrong arity, labels not occurring exactly twice, and
// disconnected diagrams, each with a distinct message.
PDCode parse_pd(std::string_view text);

std::string format_pd(const PDCode& pd);

// A combinatorial map for a link diagram. Germs are numbered 4*c + s for
// crossing c and tuple slot s; slots 0 and 2 are under, 1 and 3 over.
struct DiagramModel {
  int n = 0;
  std::vector<std::array<int, 4>> tuples;          // arc labels as given
  std::vector<int> mate;                           // germ -> other germ of its arc
  std::vector<int> arc_of_germ;                    // germ -> dense arc id
  std::vector<std::pair<int, int>> arcs;           // arc id -> (germ, germ)
  std::vector<std::vector<int>> faces;             // traced faces as corner lists
  std::vector<int> face_of_corner;                 // corner (=germ) -> face
  std::vector<std::optional<Color>> face_colors;   // set by checkerboard_coloring
  int chi = 0;                                     // n - 2n + faces
  bool colored = false;

  static bool under(int germ) { return germ % 2 == 0; }
  int face_degree(int f) const { return static_cast<int>(faces[f].size()); }
};

// Traces the faces of the rotation system (leave a germ, turn into the
// next germ clockwise at the far crossing) and checks the diagram is
// planar (chi = 2) and alternating. Errors: "non-planar PD data",
// "not alternating".
DiagramModel trace_faces(const PDCode& pd);

// Assigns checkerboard colors: at a crossing with germs a,b,c,d the faces
// in the (b,c) and (d,a) corners are black, the other two white.
DiagramModel checkerboard_coloring(DiagramModel m);

// One SBW square per crossing (germs a,b,c,d -> corners SE,NE,NW,SW); phi
// sends the + corner at each arc's under end to the - corner at its over
// end.
SbwSpec extract_sbw(const DiagramModel& m);

// Number of link components by strand traversal.
int component_count(const DiagramModel& m);

// The closed surface M spanned by a spec: the n squares, a connecting
// edge v -> phi(v) for every positive corner, and one 2-cell per psi
// orbit. Always closed and orientable with chi = -n + orbit count.
SurfaceModel build_surface(const SbwSpec& spec);

struct ReconstructedDiagram {
  SurfaceModel surface;
  DiagramModel diagram;
  std::optional<PDCode> pd;         // present exactly when the criterion holds
  std::string pd_obstruction;       // empty when pd is present
};

// Draws the alternating diagram on M: per square an overpass joining the
// two - corners and an underpass joining the two + corners, connected
// through the phi edges. Emits a PD code when M is a single sphere.
ReconstructedDiagram reconstruct_diagram(const SbwSpec& spec);

}  // namespace sbw
