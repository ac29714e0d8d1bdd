#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sbw {

// A 2-complex presented by explicit cells: every face is a cyclic word of
// signed edge references, every edge an ordered vertex pair. Used for the
// surface M built from a spec and for the boundary of the cubed complex.
struct SurfaceModel {
  struct Edge {
    std::string name;
    int v_init = 0;
    int v_term = 0;
  };
  struct Face {
    std::string name;
    std::string kind;  // "square", "black", "white", "top", "bottom"
    // Signed 1-based edge references: +k traverses edge k-1 forward.
    std::vector<int> word;
  };
  struct Component {
    std::vector<int> faces;  // face ids, ascending
    int vertex_count = 0;
    int edge_count = 0;
    int chi = 0;
    bool orientable = false;
    std::optional<int> genus;  // set when orientable
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  bool closed = false;      // every edge lies in exactly two face corners
  bool orientable = false;  // all components orientable
  int chi = 0;
  std::vector<Component> components;

  bool connected() const { return components.size() == 1; }
  // Genus of a connected orientable model.
  std::optional<int> genus() const {
    if (components.size() == 1) return components[0].genus;
    return std::nullopt;
  }
};

// Computes closedness, components, orientability (by orientation
// propagation across shared edges), chi, and genus per component.
// Vertices, edges and faces are taken as given.
SurfaceModel analyze_surface(std::vector<std::string> vertices,
                             std::vector<SurfaceModel::Edge> edges,
                             std::vector<SurfaceModel::Face> faces);

}  // namespace sbw
