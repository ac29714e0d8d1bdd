#pragma once

#include <string>
#include <vector>

#include "sbw/spec.hpp"
#include "sbw/surface.hpp"

namespace sbw {

// A dimension-graded cell complex obtained by gluing squares (dim 2) or
// cubes (dim 3). Cell classes are named deterministically per dimension
// (v0.., e0.., f0.., c0..) and carry their raw members, with the minimal
// raw cell as representative.
struct QuotientComplex {
  struct CellClass {
    std::string name;
    std::vector<std::string> members;  // raw cells, ascending; members[0] = rep
  };
  // Attachment of one cell of dimension >= 1:
  //   edges: the two endpoint classes [init, term]
  //   faces: cyclic word of signed edge classes ("+e0", "-e1")
  //   cubes: the six face classes [bottom, top, S, E, N, W]
  struct Attachment {
    std::string cell;
    std::vector<std::string> data;
  };

  int dim = 0;
  std::vector<std::vector<CellClass>> cells;  // indexed by dimension
  std::vector<Attachment> attachments;        // all dims, deterministic order
  std::vector<int> counts;                    // cells per dimension
  int euler = 0;

  SbwSpec spec;  // originating spec, kept for derived constructions
};

// The squared complex: n squares glued edge-to-edge along psi.
// 2-cells are the squares, 1-cells the psi-orbits, 0-cells the corner
// classes forced by the edge gluings. Square attachment words read
// counterclockwise from the SW corner.
QuotientComplex build_squared_complex(const SbwSpec& spec);

// The cubed complex: an upper and a lower cube over every square, side
// faces glued in pairs by (x,t) -> (f_e(x), -t), middle faces shared, top
// and bottom faces free. The squared complex embeds at t = 0.
QuotientComplex build_cubed_complex(const SbwSpec& spec);

// The subcomplex of top/bottom faces of the cubed complex, one closed
// surface per connected component. Requires a complex from
// build_cubed_complex.
std::vector<SurfaceModel> boundary_complex(const QuotientComplex& c3);

struct GroupPresentation {
  int generators = 0;
  // Words over signed 1-based generator indices.
  std::vector<std::vector<int>> relators;
};

// Presentation of the fundamental group of a connected squared complex:
// generators are the 1-cells outside a BFS spanning tree, one relator per
// square. Throws InvalidInput when the complex is disconnected.
GroupPresentation fundamental_group_presentation(const QuotientComplex& c2);

struct HomologyResult {
  int rank = 0;
  std::vector<long long> torsion;  // nontrivial invariant factors, ascending
};

// First homology of the presented group via the Smith normal form of the
// relator exponent matrix.
HomologyResult first_homology(const GroupPresentation& p);

}  // namespace sbw
