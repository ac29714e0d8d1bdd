#include "sbw/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace sbw {

namespace {

using nlohmann::json;

std::string genus_list(const CriterionReport& report) {
  std::string out;
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(report.components[i].genus);
  }
  return out;
}

json surface_value(const SurfaceModel& m) {
  json j;
  j["counts"] = {m.vertices.size(), m.edges.size(), m.faces.size()};
  j["chi"] = m.chi;
  j["closed"] = m.closed;
  j["orientable"] = m.orientable;
  if (const auto g = m.genus(); g.has_value())
    j["genus"] = *g;
  else
    j["genus"] = nullptr;
  j["components"] = json::array();
  for (const auto& comp : m.components) {
    json c;
    c["faces"] = json::array();
    for (const int f : comp.faces) c["faces"].push_back(m.faces[f].name);
    c["chi"] = comp.chi;
    c["orientable"] = comp.orientable;
    if (comp.genus.has_value())
      c["genus"] = *comp.genus;
    else
      c["genus"] = nullptr;
    j["components"].push_back(std::move(c));
  }
  json cells;
  cells["vertices"] = m.vertices;
  cells["edges"] = json::array();
  for (const auto& e : m.edges)
    cells["edges"].push_back(
        {{"name", e.name}, {"ends", {m.vertices[e.v_init], m.vertices[e.v_term]}}});
  cells["faces"] = json::array();
  for (const auto& f : m.faces) {
    json word = json::array();
    for (const int ref : f.word)
      word.push_back((ref > 0 ? "+" : "-") + m.edges[std::abs(ref) - 1].name);
    cells["faces"].push_back({{"name", f.name}, {"kind", f.kind}, {"word", word}});
  }
  j["cells"] = std::move(cells);
  return j;
}

json component_value(const ComponentReport& comp) {
  return {{"squares", comp.squares},
          {"orbits", comp.orbit_count},
          {"chi", comp.chi},
          {"genus", comp.genus}};
}

}  // namespace

std::string check_line(const CriterionReport& report) {
  std::ostringstream out;
  out << "orbits=" << report.orbit_count << " n=" << report.n
      << " verdict=" << (report.verdict ? "yes" : "no") << " chi_M=" << report.chi
      << " genus=" << genus_list(report);
  if (!report.connected) out << " connected=no";
  return out.str();
}

std::string to_json(const CriterionReport& report) {
  json j;
  j["format"] = "sbw-check";
  j["version"] = 1;
  j["n"] = report.n;
  j["orbits"] = report.orbit_count;
  j["black_orbits"] = report.black_orbit_count;
  j["white_orbits"] = report.white_orbit_count;
  j["verdict"] = report.verdict;
  j["chi"] = report.chi;
  j["connected"] = report.connected;
  j["components"] = json::array();
  for (const auto& comp : report.components) j["components"].push_back(component_value(comp));
  return j.dump(2);
}

std::string complex_json(const QuotientComplex& complex,
                         const std::vector<SurfaceModel>* boundary,
                         const HomologyResult* homology) {
  json j;
  j["format"] = "sbw-complex";
  j["version"] = 1;
  j["dim"] = complex.dim;
  j["counts"] = complex.counts;
  j["euler"] = complex.euler;
  j["cells"] = json::array();
  for (const auto& dim_cells : complex.cells) {
    json layer = json::array();
    for (const auto& cc : dim_cells)
      layer.push_back({{"name", cc.name}, {"members", cc.members}});
    j["cells"].push_back(std::move(layer));
  }
  j["attach"] = json::object();
  for (const auto& at : complex.attachments) j["attach"][at.cell] = at.data;
  if (boundary != nullptr) {
    j["boundary"] = json::array();
    for (const auto& comp : *boundary) j["boundary"].push_back(surface_value(comp));
  }
  if (homology != nullptr)
    j["h1"] = {{"rank", homology->rank}, {"torsion", homology->torsion}};
  return j.dump(2);
}

std::string to_json(const SurfaceModel& surface) {
  json j = surface_value(surface);
  j["format"] = "sbw-surface";
  j["version"] = 1;
  return j.dump(2);
}

std::string surface_diagram_json(const ReconstructedDiagram& rec) {
  json j;
  j["format"] = "sbw-surface-diagram";
  j["version"] = 1;
  j["surface"] = surface_value(rec.surface);

  const DiagramModel& m = rec.diagram;
  json diagram;
  diagram["crossings"] = json::array();
  static const char* kSlotCorner[4] = {"SE", "NE", "NW", "SW"};
  for (int c = 0; c < m.n; ++c) {
    json x;
    x["square"] = c + 1;
    x["arcs"] = m.tuples[c];  // counterclockwise germ order SE, NE, NW, SW
    diagram["crossings"].push_back(std::move(x));
  }
  diagram["arcs"] = json::array();
  for (std::size_t a = 0; a < m.arcs.size(); ++a) {
    const auto& [g1, g2] = m.arcs[a];
    diagram["arcs"].push_back(
        {{"label", m.tuples[g1 / 4][g1 % 4]},
         {"ends",
          {{{"square", g1 / 4 + 1}, {"corner", kSlotCorner[g1 % 4]}},
           {{"square", g2 / 4 + 1}, {"corner", kSlotCorner[g2 % 4]}}}}});
  }
  diagram["faces"] = json::array();
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    json face;
    face["degree"] = m.faces[f].size();
    if (m.face_colors[f].has_value())
      face["color"] = to_string(*m.face_colors[f]);
    diagram["faces"].push_back(std::move(face));
  }
  diagram["components"] = component_count(m);
  j["diagram"] = std::move(diagram);
  return j.dump(2);
}

namespace {

std::string genus_cell(const CensusClass& cls) {
  std::string out;
  for (std::size_t i = 0; i < cls.genus_per_component.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cls.genus_per_component[i]);
  }
  return out;
}

}  // namespace

std::string census_table(const CensusRow& row) {
  std::ostringstream out;
  out << "n " << row.n << "\n";
  out << "bijections " << row.total_bijections << "\n";
  out << "classes " << row.classes.size() << "\n";
  out << std::left << std::setw(6) << "class" << std::setw(6) << "size" << std::setw(8)
      << "orbits" << std::setw(9) << "verdict" << std::setw(5) << "chi" << std::setw(12)
      << "genus" << std::setw(11) << "connected" << std::setw(11) << "link_comps"
      << "round_trip" << "\n";
  for (std::size_t i = 0; i < row.classes.size(); ++i) {
    const auto& cls = row.classes[i];
    out << std::left << std::setw(6) << i << std::setw(6) << cls.size << std::setw(8)
        << cls.orbit_count << std::setw(9) << (cls.verdict ? "yes" : "no")
        << std::setw(5) << cls.chi << std::setw(12) << genus_cell(cls) << std::setw(11)
        << (cls.connected ? "yes" : "no") << std::setw(11)
        << (cls.link_components ? std::to_string(*cls.link_components) : "-")
        << (cls.round_trip_ok ? (*cls.round_trip_ok ? "yes" : "no") : "-") << "\n";
  }
  return out.str();
}

std::string to_json(const CensusRow& row) {
  json j;
  j["format"] = "sbw-census";
  j["version"] = 1;
  j["n"] = row.n;
  j["bijections"] = row.total_bijections;
  j["class_count"] = row.classes.size();
  j["classes"] = json::array();
  for (std::size_t i = 0; i < row.classes.size(); ++i) {
    const auto& cls = row.classes[i];
    json c;
    c["id"] = i;
    c["size"] = cls.size;
    c["orbits"] = cls.orbit_count;
    c["verdict"] = cls.verdict;
    c["chi"] = cls.chi;
    c["genus"] = cls.genus_per_component;
    c["connected"] = cls.connected;
    if (cls.link_components.has_value()) c["link_components"] = *cls.link_components;
    if (cls.round_trip_ok.has_value()) c["round_trip"] = *cls.round_trip_ok;
    json phi = json::array();
    for (int p = 0; p < 2 * cls.representative.n; ++p)
      phi.push_back(to_string(positive_corner(p)) + ">" +
                    to_string(cls.representative.phi[p]));
    c["phi"] = std::move(phi);
    j["classes"].push_back(std::move(c));
  }
  return j.dump(2);
}

}  // namespace sbw
