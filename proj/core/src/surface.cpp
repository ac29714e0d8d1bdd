#include "sbw/surface.hpp"

#include <cmath>
#include <cstdlib>
#include <queue>

#include "sbw/error.hpp"

namespace sbw {

SurfaceModel analyze_surface(std::vector<std::string> vertices,
                             std::vector<SurfaceModel::Edge> edges,
                             std::vector<SurfaceModel::Face> faces) {
  SurfaceModel m;
  m.vertices = std::move(vertices);
  m.edges = std::move(edges);
  m.faces = std::move(faces);

  const int nv = static_cast<int>(m.vertices.size());
  const int ne = static_cast<int>(m.edges.size());
  const int nf = static_cast<int>(m.faces.size());
  m.chi = nv - ne + nf;

  // usages[e] = list of (face, sign) corners traversing edge e.
  std::vector<std::vector<std::pair<int, int>>> usages(ne);
  for (int f = 0; f < nf; ++f) {
    for (const int ref : m.faces[f].word) {
      const int e = std::abs(ref) - 1;
      if (e < 0 || e >= ne) throw InvalidInput("face word references unknown edge");
      usages[e].push_back({f, ref > 0 ? +1 : -1});
    }
  }
  m.closed = true;
  for (const auto& u : usages)
    if (u.size() != 2) m.closed = false;

  // Orientation propagation: flipping one face must flip its neighbours
  // whenever the shared edge is traversed with equal signs.
  std::vector<int> orient(nf, 0);
  std::vector<bool> comp_orientable;
  std::vector<int> comp_of_face(nf, -1);
  int comp_count = 0;
  for (int f0 = 0; f0 < nf; ++f0) {
    if (orient[f0] != 0) continue;
    const int comp = comp_count++;
    bool ok = true;
    orient[f0] = 1;
    comp_of_face[f0] = comp;
    std::queue<int> frontier;
    frontier.push(f0);
    while (!frontier.empty()) {
      const int f = frontier.front();
      frontier.pop();
      for (const int ref : m.faces[f].word) {
        const int e = std::abs(ref) - 1;
        if (usages[e].size() != 2) continue;
        const auto [fa, sa] = usages[e][0];
        const auto [fb, sb] = usages[e][1];
        if (fa == fb) {
          if (sa == sb) ok = false;  // same face traverses the edge twice forward
          continue;
        }
        const int other = fa == f ? fb : fa;
        // Opposite traversal directions when both faces keep orientation +1.
        const int needed = -sa * sb * orient[f];
        if (orient[other] == 0) {
          orient[other] = needed;
          comp_of_face[other] = comp;
          frontier.push(other);
        } else if (orient[other] != needed) {
          ok = false;
        }
      }
    }
    comp_orientable.push_back(ok);
  }

  m.components.resize(comp_count);
  for (int f = 0; f < nf; ++f)
    m.components[comp_of_face[f]].faces.push_back(f);
  for (int c = 0; c < comp_count; ++c) {
    auto& comp = m.components[c];
    comp.orientable = comp_orientable[c];
    // Count vertices and edges reachable from this component's faces.
    std::vector<bool> vseen(nv, false), eseen(ne, false);
    for (const int f : comp.faces)
      for (const int ref : m.faces[f].word) {
        const int e = std::abs(ref) - 1;
        if (!eseen[e]) {
          eseen[e] = true;
          vseen[m.edges[e].v_init] = true;
          vseen[m.edges[e].v_term] = true;
        }
      }
    for (int v = 0; v < nv; ++v) comp.vertex_count += vseen[v] ? 1 : 0;
    for (int e = 0; e < ne; ++e) comp.edge_count += eseen[e] ? 1 : 0;
    comp.chi = comp.vertex_count - comp.edge_count + static_cast<int>(comp.faces.size());
    if (comp.orientable && (2 - comp.chi) % 2 == 0 && comp.chi <= 2)
      comp.genus = (2 - comp.chi) / 2;
  }

  m.orientable = true;
  for (const auto& comp : m.components)
    if (!comp.orientable) m.orientable = false;
  return m;
}

}  // namespace sbw
