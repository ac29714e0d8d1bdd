// Independent oracles for cross-checking the library. Everything here is
// deliberately written from scratch against the definitions, not by
// calling the code under test.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sbw/core_types.hpp"
#include "sbw/spec.hpp"

namespace oracle {

// psi by brute force: for edge e with terminal corner v, scan all edges of
// the same color for the one whose initial corner is phi(v).
inline sbw::EdgeBijection psi_by_scan(const sbw::SbwSpec& spec) {
  sbw::EdgeBijection psi;
  psi.n = spec.n;
  psi.map.resize(4 * spec.n);
  for (int i = 0; i < 4 * spec.n; ++i) {
    const sbw::EdgeRef e = sbw::edge_ref(i);
    const sbw::CornerRef target =
        spec.phi_of({e.square, sbw::terminal_corner(e.side)});
    int found = 0;
    for (int j = 0; j < 4 * spec.n; ++j) {
      const sbw::EdgeRef cand = sbw::edge_ref(j);
      if (sbw::color(cand.side) != sbw::color(e.side)) continue;
      if (sbw::CornerRef{cand.square, sbw::initial_corner(cand.side)} != target)
        continue;
      psi.map[i] = cand;
      ++found;
    }
    if (found != 1) throw std::logic_error("scan oracle found no unique image");
  }
  return psi;
}

// Cycle partition as a set of edge-index sets, one per cycle.
inline std::set<std::set<int>> cycle_partition(const sbw::EdgeBijection& psi) {
  std::set<std::set<int>> cycles;
  for (int i = 0; i < 4 * psi.n; ++i) {
    std::set<int> cycle;
    sbw::EdgeRef e = sbw::edge_ref(i);
    while (cycle.insert(sbw::edge_index(e)).second) e = psi.apply(e);
    cycles.insert(cycle);
  }
  return cycles;
}

// Exhaustive isomorphism search over relabelings x per-square rotations.
inline std::optional<std::pair<std::vector<int>, std::vector<bool>>>
find_isomorphism(const sbw::SbwSpec& a, const sbw::SbwSpec& b) {
  if (a.n != b.n) return std::nullopt;
  const int n = a.n;
  std::vector<int> new_of_old(n);
  std::iota(new_of_old.begin(), new_of_old.end(), 1);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> rot(n);
      for (int i = 0; i < n; ++i) rot[i] = (mask >> i) & 1u;
      const sbw::SbwSpec mapped = sbw::apply_isomorphism(a, new_of_old, rot);
      if (mapped.phi == b.phi) return std::make_pair(new_of_old, rot);
    }
  } while (std::next_permutation(new_of_old.begin(), new_of_old.end()));
  return std::nullopt;
}

// Region count of a rotation system by the opposite turning rule
// (counterclockwise turn at the far crossing); the count matches the
// clockwise rule on the mirror diagram, so totals agree.
inline int region_count(const std::vector<std::array<int, 4>>& tuples) {
  const int n = static_cast<int>(tuples.size());
  std::map<int, std::vector<int>> germs;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) germs[tuples[c][s]].push_back(4 * c + s);
  std::vector<int> mate(4 * n);
  for (const auto& [label, g] : germs) {
    mate[g[0]] = g[1];
    mate[g[1]] = g[0];
  }
  std::vector<bool> seen(4 * n, false);
  int regions = 0;
  for (int g0 = 0; g0 < 4 * n; ++g0) {
    if (seen[g0]) continue;
    ++regions;
    int g = g0;
    do {
      seen[g] = true;
      const int h = mate[g];
      g = (h & ~3) | ((h + 1) & 3);
    } while (g != g0);
  }
  return regions;
}

// Quotient cell counts via explicit string cells and flood fill over an
// adjacency list (no union-find). Returns class counts per dimension.
class StringQuotient {
 public:
  void add_cell(const std::string& name) {
    if (!ids_.contains(name)) {
      ids_[name] = static_cast<int>(adj_.size());
      adj_.push_back({});
    }
  }
  void identify(const std::string& a, const std::string& b) {
    add_cell(a);
    add_cell(b);
    adj_[ids_.at(a)].push_back(ids_.at(b));
    adj_[ids_.at(b)].push_back(ids_.at(a));
  }
  int classes() const {
    std::vector<bool> seen(adj_.size(), false);
    int count = 0;
    for (std::size_t i = 0; i < adj_.size(); ++i) {
      if (seen[i]) continue;
      ++count;
      std::vector<std::size_t> stack{i};
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (seen[v]) continue;
        seen[v] = true;
        for (const int w : adj_[v]) stack.push_back(w);
      }
    }
    return count;
  }

 private:
  std::map<std::string, int> ids_;
  std::vector<std::vector<int>> adj_;
};

struct ComplexCounts {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int cubes = 0;
  int euler() const { return vertices - edges + faces - cubes; }
};

inline std::string corner_name(const sbw::CornerRef& c) { return sbw::to_string(c); }
inline std::string edge_name(const sbw::EdgeRef& e) { return sbw::to_string(e); }

// Squared-complex cell counts from scratch.
inline ComplexCounts squared_counts(const sbw::SbwSpec& spec) {
  const sbw::EdgeBijection psi = psi_by_scan(spec);
  StringQuotient vq, eq;
  for (int sq = 1; sq <= spec.n; ++sq) {
    for (const sbw::Corner c :
         {sbw::Corner::SW, sbw::Corner::SE, sbw::Corner::NE, sbw::Corner::NW})
      vq.add_cell(corner_name({sq, c}));
    for (const sbw::Side s : {sbw::Side::S, sbw::Side::N, sbw::Side::W, sbw::Side::E})
      eq.add_cell(edge_name({sq, s}));
  }
  for (int i = 0; i < 4 * spec.n; ++i) {
    const sbw::EdgeRef e = sbw::edge_ref(i);
    const sbw::EdgeRef g = psi.apply(e);
    eq.identify(edge_name(e), edge_name(g));
    vq.identify(corner_name({e.square, sbw::initial_corner(e.side)}),
                corner_name({g.square, sbw::initial_corner(g.side)}));
    vq.identify(corner_name({e.square, sbw::terminal_corner(e.side)}),
                corner_name({g.square, sbw::terminal_corner(g.side)}));
  }
  return {vq.classes(), eq.classes(), spec.n, 0};
}

// Cubed-complex cell counts from scratch: two cubes per square, side faces
// glued by (x,t) -> (f_e(x), -t).
inline ComplexCounts cubed_counts(const sbw::SbwSpec& spec) {
  const sbw::EdgeBijection psi = psi_by_scan(spec);
  StringQuotient vq, eq, fq;
  const auto v_at = [](const sbw::CornerRef& c, int t) {
    return corner_name(c) + "#" + std::to_string(t);
  };
  const auto h_at = [](const sbw::EdgeRef& e, int t) {
    return edge_name(e) + "#" + std::to_string(t);
  };
  const auto vert = [](const sbw::CornerRef& c, int lo) {
    return corner_name(c) + "#v" + std::to_string(lo);
  };
  const auto side = [](const sbw::EdgeRef& e, int lo) {
    return edge_name(e) + "#f" + std::to_string(lo);
  };

  for (int sq = 1; sq <= spec.n; ++sq) {
    for (const sbw::Corner c :
         {sbw::Corner::SW, sbw::Corner::SE, sbw::Corner::NE, sbw::Corner::NW}) {
      for (const int t : {-1, 0, 1}) vq.add_cell(v_at({sq, c}, t));
      for (const int lo : {-1, 0}) eq.add_cell(vert({sq, c}, lo));
    }
    for (const sbw::Side s : {sbw::Side::S, sbw::Side::N, sbw::Side::W, sbw::Side::E}) {
      for (const int t : {-1, 0, 1}) eq.add_cell(h_at({sq, s}, t));
      for (const int lo : {-1, 0}) fq.add_cell(side({sq, s}, lo));
    }
    for (const int t : {-1, 0, 1}) fq.add_cell("sq" + std::to_string(sq) + "#" +
                                               std::to_string(t));
  }
  for (int i = 0; i < 4 * spec.n; ++i) {
    const sbw::EdgeRef e = sbw::edge_ref(i);
    const sbw::EdgeRef g = psi.apply(e);
    const sbw::CornerRef ei{e.square, sbw::initial_corner(e.side)};
    const sbw::CornerRef et{e.square, sbw::terminal_corner(e.side)};
    const sbw::CornerRef gi{g.square, sbw::initial_corner(g.side)};
    const sbw::CornerRef gt{g.square, sbw::terminal_corner(g.side)};
    fq.identify(side(e, -1), side(g, 0));
    eq.identify(h_at(e, 0), h_at(g, 0));
    eq.identify(h_at(e, -1), h_at(g, 1));
    eq.identify(vert(ei, -1), vert(gi, 0));
    eq.identify(vert(et, -1), vert(gt, 0));
    vq.identify(v_at(ei, 0), v_at(gi, 0));
    vq.identify(v_at(et, 0), v_at(gt, 0));
    vq.identify(v_at(ei, -1), v_at(gi, 1));
    vq.identify(v_at(et, -1), v_at(gt, 1));
  }
  return {vq.classes(), eq.classes(), fq.classes(), 2 * spec.n};
}

// Deterministic random spec.
inline sbw::SbwSpec random_spec(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> pick_n(1, max_n);
  const int n = pick_n(rng);
  std::vector<int> targets(2 * n);
  std::iota(targets.begin(), targets.end(), 0);
  std::shuffle(targets.begin(), targets.end(), rng);
  sbw::SbwSpec spec;
  spec.n = n;
  for (const int t : targets) spec.phi.push_back(sbw::negative_corner(t));
  return spec;
}

}  // namespace oracle
