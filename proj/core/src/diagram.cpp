#include "sbw/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sbw/error.hpp"
#include "sbw/union_find.hpp"

namespace sbw {

namespace {

std::vector<std::string> significant_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(begin, end - begin + 1));
  }
  return lines;
}

}  // namespace

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  for (const auto& line : significant_lines(text)) {
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (head != "X")
      throw InvalidInput("expected crossing line 'X a b c d', got '" + line + "'");
    std::array<int, 4> labels{};
    int count = 0;
    std::string tok;
    while (in >> tok) {
      if (count == 4)
        throw InvalidInput("crossing must list exactly 4 arc labels: '" + line + "'");
      int value = 0;
      const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || p != tok.data() + tok.size() || value < 1)
        throw InvalidInput("malformed arc label '" + tok + "'");
      labels[count++] = value;
    }
    if (count != 4)
      throw InvalidInput("crossing must list exactly 4 arc labels: '" + line + "'");
    pd.crossings.push_back(labels);
  }
  if (pd.crossings.empty()) throw InvalidInput("empty PD code");

  std::map<int, std::vector<int>> germs_of_label;
  for (int c = 0; c < static_cast<int>(pd.crossings.size()); ++c)
    for (int s = 0; s < 4; ++s) germs_of_label[pd.crossings[c][s]].push_back(4 * c + s);
  for (const auto& [label, germs] : germs_of_label) {
    if (germs.size() == 1)
      throw InvalidInput("arc label " + std::to_string(label) +
                         " occurs once; every label must occur exactly twice");
    if (germs.size() > 2)
      throw InvalidInput("arc label " + std::to_string(label) + " occurs " +
                         std::to_string(germs.size()) +
                         " times; every label must occur exactly twice");
  }

  UnionFind uf(static_cast<int>(pd.crossings.size()));
  for (const auto& [label, germs] : germs_of_label)
    uf.unite(germs[0] / 4, germs[1] / 4);
  if (uf.count() != 1) throw InvalidInput("disconnected diagram");
  return pd;
}

std::string format_pd(const PDCode& pd) {
  std::ostringstream out;
  for (const auto& x : pd.crossings)
    out << "X " << x[0] << " " << x[1] << " " << x[2] << " " << x[3] << "\n";
  return out.str();
}

namespace {

int opposite(int germ) { return (germ & ~3) | ((germ + 2) & 3); }

// Shared tracer for external PD codes and reconstructed diagrams.
DiagramModel trace_rotation_system(std::vector<std::array<int, 4>> tuples,
                                   bool require_planar) {
  DiagramModel m;
  m.n = static_cast<int>(tuples.size());
  m.tuples = std::move(tuples);

  std::map<int, std::vector<int>> germs_of_label;
  for (int c = 0; c < m.n; ++c)
    for (int s = 0; s < 4; ++s) germs_of_label[m.tuples[c][s]].push_back(4 * c + s);

  m.mate.assign(4 * m.n, -1);
  m.arc_of_germ.assign(4 * m.n, -1);
  for (const auto& [label, germs] : germs_of_label) {
    assert(germs.size() == 2);
    m.mate[germs[0]] = germs[1];
    m.mate[germs[1]] = germs[0];
  }
  for (int g = 0; g < 4 * m.n; ++g) {
    if (m.arc_of_germ[g] >= 0) continue;
    const int id = static_cast<int>(m.arcs.size());
    m.arc_of_germ[g] = id;
    m.arc_of_germ[m.mate[g]] = id;
    m.arcs.push_back({g, m.mate[g]});
  }

  // Leave a germ, arrive at its mate, turn to the next germ clockwise.
  // Orbits of this step are the faces; the orbit of germ g contains the
  // face corner between slots g and g+1 of its crossing.
  const auto next = [&](int g) {
    const int h = m.mate[g];
    return (h & ~3) | ((h + 3) & 3);
  };
  m.face_of_corner.assign(4 * m.n, -1);
  for (int g0 = 0; g0 < 4 * m.n; ++g0) {
    if (m.face_of_corner[g0] >= 0) continue;
    const int f = static_cast<int>(m.faces.size());
    std::vector<int> corners;
    int g = g0;
    do {
      m.face_of_corner[g] = f;
      corners.push_back(g);
      g = next(g);
    } while (g != g0);
    m.faces.push_back(std::move(corners));
  }
  m.chi = m.n - 2 * m.n + static_cast<int>(m.faces.size());
  m.face_colors.assign(m.faces.size(), std::nullopt);

  if (require_planar && m.chi != 2) throw InvalidInput("non-planar PD data");
  for (const auto& [a, b] : m.arcs)
    if (DiagramModel::under(a) == DiagramModel::under(b))
      throw InvalidInput("not alternating");
  return m;
}

}  // namespace

DiagramModel trace_faces(const PDCode& pd) {
  return trace_rotation_system(pd.crossings, /*require_planar=*/true);
}

DiagramModel checkerboard_coloring(DiagramModel m) {
  // Corner between slots s and s+1 is black for s in {1,3}, white for
  // s in {0,2}; consistency over every face is forced by alternation.
  for (int g = 0; g < 4 * m.n; ++g) {
    const Color c = (g % 2 == 1) ? Color::Black : Color::White;
    auto& slot = m.face_colors[m.face_of_corner[g]];
    if (slot.has_value() && *slot != c) throw InvalidInput("not alternating");
    slot = c;
  }
  m.colored = true;
  return m;
}

namespace {

// Tuple slots a,b,c,d of a crossing sit at corners SE,NE,NW,SW of its
// square; that order is counterclockwise and puts the under germs on the
// positive corners.
constexpr std::array<Corner, 4> kCornerOfSlot = {Corner::SE, Corner::NE, Corner::NW,
                                                 Corner::SW};

constexpr int slot_of_corner(Corner c) {
  switch (c) {
    case Corner::SE: return 0;
    case Corner::NE: return 1;
    case Corner::NW: return 2;
    default:         return 3;  // SW
  }
}

}  // namespace

SbwSpec extract_sbw(const DiagramModel& m) {
  if (!m.colored)
    throw InvalidInput("extraction requires a checkerboard-colored diagram");
  std::vector<std::pair<CornerRef, CornerRef>> pairs;
  for (const auto& [a, b] : m.arcs) {
    const int under_germ = DiagramModel::under(a) ? a : b;
    const int over_germ = DiagramModel::under(a) ? b : a;
    pairs.push_back({CornerRef{under_germ / 4 + 1, kCornerOfSlot[under_germ % 4]},
                     CornerRef{over_germ / 4 + 1, kCornerOfSlot[over_germ % 4]}});
  }
  return make_spec(m.n, pairs);
}

int component_count(const DiagramModel& m) {
  UnionFind uf(4 * m.n);
  for (int g = 0; g < 4 * m.n; ++g) {
    uf.unite(g, m.mate[g]);
    uf.unite(g, opposite(g));
  }
  return uf.count();
}

SurfaceModel build_surface(const SbwSpec& spec) {
  const EdgeBijection psi = induced_edge_bijection(spec);
  const OrbitDecomposition dec = orbit_decomposition(psi);
  const int n = spec.n;

  std::vector<std::string> vertices(4 * n);
  for (int i = 0; i < 4 * n; ++i)
    vertices[i] = to_string(CornerRef{i / 4 + 1, static_cast<Corner>(i % 4)});
  const auto vid = [&](const CornerRef& c) {
    return 4 * (c.square - 1) + static_cast<int>(c.corner);
  };

  // Square sides first, then one connecting edge v -> phi(v) per positive
  // corner.
  std::vector<SurfaceModel::Edge> edges;
  for (int i = 0; i < 4 * n; ++i) {
    const EdgeRef e = edge_ref(i);
    edges.push_back({to_string(e), vid({e.square, initial_corner(e.side)}),
                     vid({e.square, terminal_corner(e.side)})});
  }
  for (int p = 0; p < 2 * n; ++p) {
    const CornerRef v = positive_corner(p);
    const CornerRef t = spec.phi[p];
    edges.push_back({to_string(v) + ">" + to_string(t), vid(v), vid(t)});
  }
  const auto connector = [&](const CornerRef& pos) { return 4 * n + positive_index(pos); };

  std::vector<SurfaceModel::Face> faces;
  for (int i = 1; i <= n; ++i) {
    SurfaceModel::Face f;
    f.name = "s" + std::to_string(i);
    f.kind = "square";
    f.word = {+(edge_index({i, Side::S}) + 1), -(edge_index({i, Side::E}) + 1),
              +(edge_index({i, Side::N}) + 1), -(edge_index({i, Side::W}) + 1)};
    faces.push_back(std::move(f));
  }
  const auto attach_orbit_cells = [&](const std::vector<std::vector<EdgeRef>>& orbits,
                                      const char* kind) {
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      SurfaceModel::Face f;
      f.name = std::string(kind) + std::to_string(k);
      f.kind = kind;
      for (const EdgeRef& e : orbits[k]) {
        f.word.push_back(+(edge_index(e) + 1));
        f.word.push_back(+(connector({e.square, terminal_corner(e.side)}) + 1));
      }
      faces.push_back(std::move(f));
    }
  };
  attach_orbit_cells(dec.black_orbits, "black");
  attach_orbit_cells(dec.white_orbits, "white");

  SurfaceModel m = analyze_surface(std::move(vertices), std::move(edges), std::move(faces));
  if (!m.closed || !m.orientable)
    throw std::logic_error("surface construction produced a non-surface");
  assert(m.chi == -n + dec.total());
  return m;
}

ReconstructedDiagram reconstruct_diagram(const SbwSpec& spec) {
  const CriterionReport report = criterion_check(spec);
  const int n = spec.n;

  ReconstructedDiagram out;
  out.surface = build_surface(spec);

  // Germ g = 4*(square-1) + slot; arcs follow the connecting edges.
  std::vector<int> arc_of_germ(4 * n, -1);
  std::vector<std::pair<int, int>> arcs(2 * n);
  for (int p = 0; p < 2 * n; ++p) {
    const CornerRef v = positive_corner(p);
    const CornerRef t = spec.phi[p];
    const int a = 4 * (v.square - 1) + slot_of_corner(v.corner);
    const int b = 4 * (t.square - 1) + slot_of_corner(t.corner);
    arcs[p] = {a, b};
    arc_of_germ[a] = p;
    arc_of_germ[b] = p;
  }

  if (!report.verdict) {
    // No planar code; return the diagram on M with arc ids as labels.
    std::vector<std::array<int, 4>> tuples(n);
    for (int c = 0; c < n; ++c)
      for (int s = 0; s < 4; ++s) tuples[c][s] = arc_of_germ[4 * c + s] + 1;
    out.diagram = checkerboard_coloring(
        trace_rotation_system(std::move(tuples), /*require_planar=*/false));
    out.pd_obstruction = report.connected ? "genus > 0: no PD code"
                                          : "disconnected surface: no PD code";
    return out;
  }

  // Strand traversal: components started at the minimal square whose
  // underpass is untraversed, entering at the SE germ so that the first
  // germ used is an under-in germ; arcs are numbered as first reached.
  std::vector<int> label_of_arc(2 * n, 0);
  std::vector<bool> entered(4 * n, false);
  std::vector<int> under_in(n, -1);
  int next_label = 1;
  for (int start_sq = 0; start_sq < n; ++start_sq) {
    const int start = 4 * start_sq + slot_of_corner(Corner::SE);
    // The underpass of this square is untraversed iff neither of its
    // under germs has been entered.
    if (entered[start] || entered[4 * start_sq + slot_of_corner(Corner::NW)]) continue;
    int g = start;  // entering germ
    label_of_arc[arc_of_germ[g]] = next_label++;
    while (true) {
      entered[g] = true;
      if (DiagramModel::under(g)) under_in[g / 4] = g;
      const int exit = opposite(g);
      const int arc = arc_of_germ[exit];
      const int far = arcs[arc].first == exit ? arcs[arc].second : arcs[arc].first;
      if (far == start) break;
      if (label_of_arc[arc] == 0) label_of_arc[arc] = next_label++;
      g = far;
    }
  }
  assert(next_label == 2 * n + 1);

  PDCode pd;
  pd.crossings.resize(n);
  for (int c = 0; c < n; ++c) {
    assert(under_in[c] >= 0);
    for (int k = 0; k < 4; ++k)
      pd.crossings[c][k] = label_of_arc[arc_of_germ[4 * c + (under_in[c] % 4 + k) % 4]];
  }

  // Feed the code through the public pipeline; this revalidates planarity
  // and alternation of the reconstruction.
  out.diagram = checkerboard_coloring(trace_faces(parse_pd(format_pd(pd))));
  out.pd = std::move(pd);
  return out;
}

}  // namespace sbw
