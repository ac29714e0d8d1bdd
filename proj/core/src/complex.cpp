#include "sbw/complex.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

#include "sbw/error.hpp"
#include "sbw/snf.hpp"
#include "sbw/union_find.hpp"

namespace sbw {

namespace {

constexpr int corner_index(const CornerRef& c) {
  return 4 * (c.square - 1) + static_cast<int>(c.corner);
}

CornerRef corner_ref(int index) {
  return {index / 4 + 1, static_cast<Corner>(index % 4)};
}

// Groups raw cell indices into classes ordered by minimal member; returns
// (class id per raw index, members per class).
std::pair<std::vector<int>, std::vector<std::vector<int>>> classes_of(UnionFind& uf,
                                                                      int size) {
  std::vector<int> cls(size, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < size; ++i) {
    const int r = uf.find(i);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(members.size());
      members.push_back({});
    }
    cls[i] = cls[r];
    members[cls[i]].push_back(i);
  }
  return {std::move(cls), std::move(members)};
}

std::string signed_name(const std::string& name, bool forward) {
  return (forward ? "+" : "-") + name;
}

// Sides in the counterclockwise boundary word of a square, starting at the
// SW corner, with their traversal direction relative to the edge
// orientation (- corner to + corner).
constexpr std::array<std::pair<Side, bool>, 4> kSquareWord = {{
    {Side::S, true},
    {Side::E, false},
    {Side::N, true},
    {Side::W, false},
}};

}  // namespace

QuotientComplex build_squared_complex(const SbwSpec& spec) {
  const EdgeBijection psi = induced_edge_bijection(spec);
  const int n = spec.n;

  // 1-cells: psi-orbits, ordered by minimal edge.
  const OrbitDecomposition dec = orbit_decomposition(psi);
  std::vector<std::vector<EdgeRef>> orbits;
  for (const auto& o : dec.black_orbits) orbits.push_back(o);
  for (const auto& o : dec.white_orbits) orbits.push_back(o);
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<int> orbit_of_edge(4 * n, -1);
  for (int k = 0; k < static_cast<int>(orbits.size()); ++k)
    for (const EdgeRef& e : orbits[k]) orbit_of_edge[edge_index(e)] = k;

  // 0-cells: gluing an edge onto its psi-image matches up both endpoints.
  UnionFind uf(4 * n);
  for (int i = 0; i < 4 * n; ++i) {
    const EdgeRef e = edge_ref(i);
    const EdgeRef g = psi.apply(e);
    uf.unite(corner_index({e.square, initial_corner(e.side)}),
             corner_index({g.square, initial_corner(g.side)}));
    uf.unite(corner_index({e.square, terminal_corner(e.side)}),
             corner_index({g.square, terminal_corner(g.side)}));
  }
  auto [vertex_class, vertex_members] = classes_of(uf, 4 * n);

  QuotientComplex c;
  c.dim = 2;
  c.spec = spec;
  c.cells.resize(3);

  for (const auto& members : vertex_members) {
    QuotientComplex::CellClass cc;
    cc.name = "v" + std::to_string(c.cells[0].size());
    for (const int m : members) cc.members.push_back(to_string(corner_ref(m)));
    c.cells[0].push_back(std::move(cc));
  }
  for (int k = 0; k < static_cast<int>(orbits.size()); ++k) {
    QuotientComplex::CellClass cc;
    cc.name = "e" + std::to_string(k);
    for (const EdgeRef& e : orbits[k]) cc.members.push_back(to_string(e));
    std::sort(cc.members.begin() + 1, cc.members.end());
    c.cells[1].push_back(std::move(cc));
  }
  for (int i = 1; i <= n; ++i)
    c.cells[2].push_back({"f" + std::to_string(i - 1), {"s" + std::to_string(i)}});

  for (int k = 0; k < static_cast<int>(orbits.size()); ++k) {
    const EdgeRef rep = orbits[k].front();
    const int vi = vertex_class[corner_index({rep.square, initial_corner(rep.side)})];
    const int vt = vertex_class[corner_index({rep.square, terminal_corner(rep.side)})];
    c.attachments.push_back(
        {c.cells[1][k].name, {c.cells[0][vi].name, c.cells[0][vt].name}});
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<std::string> word;
    for (const auto& [side, forward] : kSquareWord)
      word.push_back(
          signed_name(c.cells[1][orbit_of_edge[edge_index({i, side})]].name, forward));
    c.attachments.push_back({c.cells[2][i - 1].name, std::move(word)});
  }

  c.counts = {static_cast<int>(c.cells[0].size()), static_cast<int>(c.cells[1].size()),
              n};
  c.euler = c.counts[0] - c.counts[1] + c.counts[2];
  return c;
}

namespace {

// Raw cell indexing for the cubed complex. Levels are numbered
// 0 -> t=-1, 1 -> t=0, 2 -> t=+1; intervals 0 -> [-1,0], 1 -> [0,1].
struct CubedIndex {
  int n;

  int vertices() const { return 12 * n; }
  int vertex(const CornerRef& c, int level) const {
    return level * 4 * n + corner_index(c);
  }

  int edges() const { return 20 * n; }
  int horizontal(const EdgeRef& e, int level) const {
    return level * 4 * n + edge_index(e);
  }
  int vertical(const CornerRef& c, int interval) const {
    return 12 * n + interval * 4 * n + corner_index(c);
  }

  int faces() const { return 11 * n; }
  int horizontal_face(int square, int level) const {
    return level * n + (square - 1);
  }
  int side_face(const EdgeRef& e, int interval) const {
    // Upper side faces come first so that the upper face is the class
    // representative of each glued pair.
    return 3 * n + (1 - interval) * 4 * n + edge_index(e);
  }

  static const char* level_name(int level) {
    return level == 0 ? "-1" : level == 1 ? "0" : "+1";
  }
  static const char* interval_name(int interval) {
    return interval == 0 ? "[-1,0]" : "[0,1]";
  }

  std::string vertex_name(int idx) const {
    return to_string(corner_ref(idx % (4 * n))) + "@" + level_name(idx / (4 * n));
  }
  std::string edge_name(int idx) const {
    if (idx < 12 * n)
      return to_string(edge_ref(idx % (4 * n))) + "@" + level_name(idx / (4 * n));
    idx -= 12 * n;
    return to_string(corner_ref(idx % (4 * n))) + "@" + interval_name(idx / (4 * n));
  }
  std::string face_name(int idx) const {
    if (idx < 3 * n)
      return "s" + std::to_string(idx % n + 1) + "@" + level_name(idx / n);
    idx -= 3 * n;
    return to_string(edge_ref(idx % (4 * n))) + "@" + interval_name(1 - idx / (4 * n));
  }
};

}  // namespace

QuotientComplex build_cubed_complex(const SbwSpec& spec) {
  const EdgeBijection psi = induced_edge_bijection(spec);
  const int n = spec.n;
  const CubedIndex ix{n};

  // Side faces glue in pairs: e x [-1,0] onto psi(e) x [0,1] by
  // (x,t) -> (f_e(x), -t). Everything below follows from that map.
  UnionFind face_uf(ix.faces());
  UnionFind edge_uf(ix.edges());
  UnionFind vertex_uf(ix.vertices());
  for (int i = 0; i < 4 * n; ++i) {
    const EdgeRef e = edge_ref(i);
    const EdgeRef g = psi.apply(e);
    const CornerRef e_init{e.square, initial_corner(e.side)};
    const CornerRef e_term{e.square, terminal_corner(e.side)};
    const CornerRef g_init{g.square, initial_corner(g.side)};
    const CornerRef g_term{g.square, terminal_corner(g.side)};

    face_uf.unite(ix.side_face(e, 0), ix.side_face(g, 1));

    edge_uf.unite(ix.horizontal(e, 1), ix.horizontal(g, 1));   // t=0
    edge_uf.unite(ix.horizontal(e, 0), ix.horizontal(g, 2));   // t=-1 -> t=+1
    edge_uf.unite(ix.vertical(e_init, 0), ix.vertical(g_init, 1));
    edge_uf.unite(ix.vertical(e_term, 0), ix.vertical(g_term, 1));

    vertex_uf.unite(ix.vertex(e_init, 1), ix.vertex(g_init, 1));
    vertex_uf.unite(ix.vertex(e_term, 1), ix.vertex(g_term, 1));
    vertex_uf.unite(ix.vertex(e_init, 0), ix.vertex(g_init, 2));
    vertex_uf.unite(ix.vertex(e_term, 0), ix.vertex(g_term, 2));
  }

  auto [vertex_class, vertex_members] = classes_of(vertex_uf, ix.vertices());
  auto [edge_class, edge_members] = classes_of(edge_uf, ix.edges());
  auto [face_class, face_members] = classes_of(face_uf, ix.faces());

  QuotientComplex c;
  c.dim = 3;
  c.spec = spec;
  c.cells.resize(4);

  for (const auto& members : vertex_members) {
    QuotientComplex::CellClass cc;
    cc.name = "v" + std::to_string(c.cells[0].size());
    for (const int m : members) cc.members.push_back(ix.vertex_name(m));
    c.cells[0].push_back(std::move(cc));
  }
  for (const auto& members : edge_members) {
    QuotientComplex::CellClass cc;
    cc.name = "e" + std::to_string(c.cells[1].size());
    for (const int m : members) cc.members.push_back(ix.edge_name(m));
    c.cells[1].push_back(std::move(cc));
  }
  for (const auto& members : face_members) {
    QuotientComplex::CellClass cc;
    cc.name = "f" + std::to_string(c.cells[2].size());
    for (const int m : members) cc.members.push_back(ix.face_name(m));
    c.cells[2].push_back(std::move(cc));
  }
  for (int i = 1; i <= n; ++i)
    c.cells[3].push_back({"c" + std::to_string(i - 1), {"s" + std::to_string(i) + "@[0,1]"}});
  for (int i = 1; i <= n; ++i)
    c.cells[3].push_back(
        {"c" + std::to_string(n + i - 1), {"s" + std::to_string(i) + "@[-1,0]"}});

  const auto vname = [&](int raw) { return c.cells[0][vertex_class[raw]].name; };
  const auto ename = [&](int raw) { return c.cells[1][edge_class[raw]].name; };
  const auto fname = [&](int raw) { return c.cells[2][face_class[raw]].name; };

  // Edge attachments record the representative's endpoints; the vertical
  // gluing reverses direction (t -> -t), so only the unordered endpoint
  // pair is class-invariant.
  for (int k = 0; k < static_cast<int>(edge_members.size()); ++k) {
    const int rep = edge_members[k][0];
    int vi, vt;
    if (rep < 12 * n) {
      const int level = rep / (4 * n);
      const EdgeRef e = edge_ref(rep % (4 * n));
      vi = ix.vertex({e.square, initial_corner(e.side)}, level);
      vt = ix.vertex({e.square, terminal_corner(e.side)}, level);
    } else {
      const int r = rep - 12 * n;
      const int interval = r / (4 * n);
      const CornerRef v = corner_ref(r % (4 * n));
      vi = ix.vertex(v, interval == 0 ? 0 : 1);
      vt = ix.vertex(v, interval == 0 ? 1 : 2);
    }
    c.attachments.push_back({c.cells[1][k].name, {vname(vi), vname(vt)}});
  }

  // Face attachments.
  for (int k = 0; k < static_cast<int>(face_members.size()); ++k) {
    const int rep = face_members[k][0];
    std::vector<std::string> word;
    if (rep < 3 * n) {
      const int level = rep / n;
      const int square = rep % n + 1;
      for (const auto& [side, forward] : kSquareWord)
        word.push_back(signed_name(ename(ix.horizontal({square, side}, level)), forward));
    } else {
      const int r = rep - 3 * n;
      const int interval = 1 - r / (4 * n);
      const EdgeRef e = edge_ref(r % (4 * n));
      const CornerRef e_init{e.square, initial_corner(e.side)};
      const CornerRef e_term{e.square, terminal_corner(e.side)};
      const int lo = interval == 0 ? 0 : 1;
      const int hi = lo + 1;
      word = {signed_name(ename(ix.horizontal(e, lo)), true),
              signed_name(ename(ix.vertical(e_term, interval)), true),
              signed_name(ename(ix.horizontal(e, hi)), false),
              signed_name(ename(ix.vertical(e_init, interval)), false)};
    }
    c.attachments.push_back({c.cells[2][k].name, std::move(word)});
  }

  // Cube attachments: [bottom, top, S, E, N, W].
  for (int cube = 0; cube < 2 * n; ++cube) {
    const int square = cube % n + 1;
    const int interval = cube < n ? 1 : 0;  // upper cubes first
    std::vector<std::string> faces6 = {
        fname(ix.horizontal_face(square, interval == 1 ? 1 : 0)),
        fname(ix.horizontal_face(square, interval == 1 ? 2 : 1)),
    };
    for (const Side side : {Side::S, Side::E, Side::N, Side::W})
      faces6.push_back(fname(ix.side_face({square, side}, interval)));
    c.attachments.push_back({c.cells[3][cube].name, std::move(faces6)});
  }

  c.counts = {static_cast<int>(c.cells[0].size()), static_cast<int>(c.cells[1].size()),
              static_cast<int>(c.cells[2].size()), 2 * n};
  c.euler = c.counts[0] - c.counts[1] + c.counts[2] - c.counts[3];
  assert(c.counts[2] == 7 * n);
  return c;
}

namespace {

// Extracts the sub-surface spanned by one component of an analyzed model.
SurfaceModel component_model(const SurfaceModel& whole,
                             const SurfaceModel::Component& comp) {
  std::vector<int> vmap(whole.vertices.size(), -1);
  std::vector<int> emap(whole.edges.size(), -1);
  std::vector<std::string> vertices;
  std::vector<SurfaceModel::Edge> edges;
  std::vector<SurfaceModel::Face> faces;
  for (const int f : comp.faces) {
    SurfaceModel::Face face = whole.faces[f];
    for (int& ref : face.word) {
      const int e = std::abs(ref) - 1;
      if (emap[e] < 0) {
        for (const int v : {whole.edges[e].v_init, whole.edges[e].v_term})
          if (vmap[v] < 0) {
            vmap[v] = static_cast<int>(vertices.size());
            vertices.push_back(whole.vertices[v]);
          }
        emap[e] = static_cast<int>(edges.size());
        edges.push_back({whole.edges[e].name, vmap[whole.edges[e].v_init],
                         vmap[whole.edges[e].v_term]});
      }
      ref = ref > 0 ? emap[e] + 1 : -(emap[e] + 1);
    }
    faces.push_back(std::move(face));
  }
  return analyze_surface(std::move(vertices), std::move(edges), std::move(faces));
}

}  // namespace

std::vector<SurfaceModel> boundary_complex(const QuotientComplex& c3) {
  if (c3.dim != 3)
    throw InvalidInput("boundary requires a complex built with dimension 3");
  const SbwSpec& spec = c3.spec;
  const EdgeBijection psi = induced_edge_bijection(spec);
  const int n = spec.n;

  // Boundary edge classes pair e x {-1} with psi(e) x {+1}; vertices follow.
  UnionFind vertex_uf(8 * n);  // (corner, level 0/1) with level 0 -> t=-1
  const auto vix = [&](const CornerRef& v, int level) {
    return level * 4 * n + corner_index(v);
  };
  for (int i = 0; i < 4 * n; ++i) {
    const EdgeRef e = edge_ref(i);
    const EdgeRef g = psi.apply(e);
    vertex_uf.unite(vix({e.square, initial_corner(e.side)}, 0),
                    vix({g.square, initial_corner(g.side)}, 1));
    vertex_uf.unite(vix({e.square, terminal_corner(e.side)}, 0),
                    vix({g.square, terminal_corner(g.side)}, 1));
  }
  auto [vertex_class, vertex_members] = classes_of(vertex_uf, 8 * n);

  std::vector<std::string> vertices;
  for (const auto& members : vertex_members) {
    const int rep = members[0];
    vertices.push_back(to_string(corner_ref(rep % (4 * n))) + "@" +
                       (rep < 4 * n ? "-1" : "+1"));
  }

  // One edge per pair, represented by its t=-1 member.
  std::vector<SurfaceModel::Edge> edges(4 * n);
  std::vector<int> psi_inverse(4 * n);
  for (int i = 0; i < 4 * n; ++i) psi_inverse[edge_index(psi.apply(edge_ref(i)))] = i;
  for (int i = 0; i < 4 * n; ++i) {
    const EdgeRef e = edge_ref(i);
    edges[i] = {to_string(e) + "@-1",
                vertex_class[vix({e.square, initial_corner(e.side)}, 0)],
                vertex_class[vix({e.square, terminal_corner(e.side)}, 0)]};
  }
  const auto class_at_top = [&](const EdgeRef& e) {
    return psi_inverse[edge_index(e)];  // class keyed by its bottom member
  };

  std::vector<SurfaceModel::Face> faces;
  for (int i = 1; i <= n; ++i) {
    SurfaceModel::Face f;
    f.name = "s" + std::to_string(i) + "@+1";
    f.kind = "top";
    for (const auto& [side, forward] : kSquareWord) {
      const int e = class_at_top({i, side});
      f.word.push_back(forward ? e + 1 : -(e + 1));
    }
    faces.push_back(std::move(f));
  }
  for (int i = 1; i <= n; ++i) {
    SurfaceModel::Face f;
    f.name = "s" + std::to_string(i) + "@-1";
    f.kind = "bottom";
    for (const auto& [side, forward] : kSquareWord) {
      const int e = edge_index({i, side});
      f.word.push_back(forward ? e + 1 : -(e + 1));
    }
    faces.push_back(std::move(f));
  }

  const SurfaceModel whole =
      analyze_surface(std::move(vertices), std::move(edges), std::move(faces));
  assert(whole.closed);
  std::vector<SurfaceModel> result;
  for (const auto& comp : whole.components) result.push_back(component_model(whole, comp));
  return result;
}

GroupPresentation fundamental_group_presentation(const QuotientComplex& c2) {
  if (c2.dim != 2)
    throw InvalidInput("presentation requires a complex built with dimension 2");
  const int nv = c2.counts[0];
  const int ne = c2.counts[1];

  std::map<std::string, int> edge_id;
  for (int e = 0; e < ne; ++e) edge_id[c2.cells[1][e].name] = e;
  std::map<std::string, int> vertex_id;
  for (int v = 0; v < nv; ++v) vertex_id[c2.cells[0][v].name] = v;

  std::vector<std::pair<int, int>> endpoints(ne);
  std::vector<std::vector<std::pair<int, int>>> incident(nv);  // (edge, other vertex)
  std::vector<std::vector<std::string>> square_words;
  for (const auto& at : c2.attachments) {
    if (at.cell.starts_with("e")) {
      const int e = edge_id.at(at.cell);
      endpoints[e] = {vertex_id.at(at.data[0]), vertex_id.at(at.data[1])};
    } else if (at.cell.starts_with("f")) {
      square_words.push_back(at.data);
    }
  }
  for (int e = 0; e < ne; ++e) {
    incident[endpoints[e].first].push_back({e, endpoints[e].second});
    incident[endpoints[e].second].push_back({e, endpoints[e].first});
  }
  for (auto& adj : incident) std::sort(adj.begin(), adj.end());

  // BFS spanning tree from the minimal vertex class, edges tried in class
  // order.
  std::vector<bool> in_tree(ne, false);
  std::vector<bool> seen(nv, false);
  std::queue<int> frontier;
  seen[0] = true;
  frontier.push(0);
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const auto& [e, w] : incident[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      in_tree[e] = true;
      ++reached;
      frontier.push(w);
    }
  }
  if (reached != nv)
    throw InvalidInput("complex is disconnected; no fundamental group presentation");

  GroupPresentation p;
  std::vector<int> generator_of(ne, 0);
  for (int e = 0; e < ne; ++e)
    if (!in_tree[e]) generator_of[e] = ++p.generators;

  for (const auto& word : square_words) {
    std::vector<int> relator;
    for (const auto& letter : word) {
      const int e = edge_id.at(letter.substr(1));
      if (in_tree[e]) continue;
      relator.push_back(letter[0] == '+' ? generator_of[e] : -generator_of[e]);
    }
    p.relators.push_back(std::move(relator));
  }
  return p;
}

HomologyResult first_homology(const GroupPresentation& p) {
  std::vector<std::vector<long long>> m(p.relators.size(),
                                        std::vector<long long>(p.generators, 0));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const int g : p.relators[r]) {
      if (g == 0 || std::abs(g) > p.generators)
        throw InvalidInput("relator references generator out of range");
      m[r][std::abs(g) - 1] += g > 0 ? 1 : -1;
    }

  const std::vector<long long> diag = smith_diagonal(std::move(m));
  HomologyResult h;
  int nonzero = 0;
  for (const long long d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) h.torsion.push_back(d);
  }
  std::sort(h.torsion.begin(), h.torsion.end());
  h.rank = p.generators - nonzero;
  return h;
}

}  // namespace sbw
