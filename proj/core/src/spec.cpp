#include "sbw/spec.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sbw/error.hpp"
#include "sbw/union_find.hpp"

namespace sbw {

void validate(const SbwSpec& spec) {
  if (spec.n < 1) throw InvalidInput("spec needs at least one square (n >= 1)");
  if (static_cast<int>(spec.phi.size()) != 2 * spec.n)
    throw InvalidInput("phi must assign a target to every positive corner");
  std::vector<bool> hit(2 * spec.n, false);
  for (int p = 0; p < 2 * spec.n; ++p) {
    const CornerRef t = spec.phi[p];
    if (t.square < 1 || t.square > spec.n)
      throw InvalidInput("phi target square index out of range: " + to_string(t));
    if (is_positive(t.corner))
      throw InvalidInput("phi target must be a negative corner (SW or NE): " +
                         to_string(t));
    const int idx = negative_index(t);
    if (hit[idx])
      throw InvalidInput("duplicate phi target: " + to_string(t));
    hit[idx] = true;
  }
}

SbwSpec make_spec(int n, const std::vector<std::pair<CornerRef, CornerRef>>& pairs) {
  if (n < 1) throw InvalidInput("spec needs at least one square (n >= 1)");
  SbwSpec spec;
  spec.n = n;
  spec.phi.assign(2 * n, CornerRef{0, Corner::SW});
  std::vector<bool> seen(2 * n, false);
  for (const auto& [src, dst] : pairs) {
    if (src.square < 1 || src.square > n)
      throw InvalidInput("phi source square index out of range: " + to_string(src));
    if (!is_positive(src.corner))
      throw InvalidInput("phi source must be a positive corner (SE or NW): " +
                         to_string(src));
    const int p = positive_index(src);
    if (seen[p]) throw InvalidInput("duplicate phi source: " + to_string(src));
    seen[p] = true;
    spec.phi[p] = dst;
  }
  if (static_cast<int>(pairs.size()) != 2 * n)
    throw InvalidInput("phi must list exactly 2n pairs");
  validate(spec);
  return spec;
}

std::string format_spec(const SbwSpec& spec) {
  std::ostringstream out;
  out << "sbw 1\n";
  out << "n " << spec.n << "\n";
  for (int p = 0; p < 2 * spec.n; ++p)
    out << "phi " << to_string(positive_corner(p)) << " " << to_string(spec.phi[p])
        << "\n";
  return out.str();
}

namespace {

// "<sq>.<corner>" -> CornerRef; class_hint selects the accepted corners.
CornerRef parse_corner_ref(const std::string& token, bool want_positive) {
  const auto dot = token.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= token.size())
    throw InvalidInput("malformed corner reference: '" + token + "'");
  int square = 0;
  const char* first = token.data();
  const auto [ptr, ec] = std::from_chars(first, first + dot, square);
  if (ec != std::errc() || ptr != first + dot)
    throw InvalidInput("malformed square index in '" + token + "'");
  const std::string name = token.substr(dot + 1);
  Corner corner;
  if (name == "SW") corner = Corner::SW;
  else if (name == "SE") corner = Corner::SE;
  else if (name == "NE") corner = Corner::NE;
  else if (name == "NW") corner = Corner::NW;
  else throw InvalidInput("unknown corner label in '" + token + "'");
  if (want_positive && !is_positive(corner))
    throw InvalidInput("phi source must be a positive corner (SE or NW): '" +
                       token + "'");
  if (!want_positive && is_positive(corner))
    throw InvalidInput("phi target must be a negative corner (SW or NE): '" +
                       token + "'");
  return {square, corner};
}

std::vector<std::string> significant_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    // trim
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(begin, end - begin + 1));
  }
  return lines;
}

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

SbwSpec parse_spec(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw InvalidInput("empty spec input");
  if (lines[0] != "sbw 1")
    throw InvalidInput("expected header 'sbw 1', got '" + lines[0] + "'");
  if (lines.size() < 2) throw InvalidInput("missing 'n <count>' line");
  const auto nwords = split_words(lines[1]);
  int n = 0;
  if (nwords.size() != 2 || nwords[0] != "n" ||
      std::from_chars(nwords[1].data(), nwords[1].data() + nwords[1].size(), n).ec !=
          std::errc())
    throw InvalidInput("malformed 'n <count>' line: '" + lines[1] + "'");
  if (n < 1) throw InvalidInput("spec needs at least one square (n >= 1)");
  if (static_cast<int>(lines.size()) != 2 + 2 * n)
    throw InvalidInput("expected exactly " + std::to_string(2 * n) +
                       " phi lines, got " + std::to_string(lines.size() - 2));

  std::vector<std::pair<CornerRef, CornerRef>> pairs;
  for (int i = 2; i < static_cast<int>(lines.size()); ++i) {
    const auto words = split_words(lines[i]);
    if (words.size() != 3 || words[0] != "phi")
      throw InvalidInput("malformed phi line: '" + lines[i] + "'");
    CornerRef src = parse_corner_ref(words[1], /*want_positive=*/true);
    CornerRef dst = parse_corner_ref(words[2], /*want_positive=*/false);
    if (src.square < 1 || src.square > n)
      throw InvalidInput("phi source square index out of range: " + to_string(src));
    pairs.emplace_back(src, dst);
  }
  return make_spec(n, pairs);
}

void validate(const EdgeBijection& psi) {
  if (psi.n < 1 || static_cast<int>(psi.map.size()) != 4 * psi.n)
    throw InvalidInput("edge bijection must cover all 4n edges");
  std::vector<bool> hit(4 * psi.n, false);
  for (int e = 0; e < 4 * psi.n; ++e) {
    const EdgeRef img = psi.map[e];
    if (img.square < 1 || img.square > psi.n)
      throw InvalidInput("edge bijection image out of range: " + to_string(img));
    if (color(img.side) != color(edge_ref(e).side))
      throw InvalidInput("edge bijection must preserve color: " +
                         to_string(edge_ref(e)) + " -> " + to_string(img));
    const int idx = edge_index(img);
    if (hit[idx]) throw InvalidInput("edge bijection image repeated: " + to_string(img));
    hit[idx] = true;
  }
}

EdgeBijection induced_edge_bijection(const SbwSpec& spec) {
  validate(spec);
  EdgeBijection psi;
  psi.n = spec.n;
  psi.map.resize(4 * spec.n);
  for (int i = 0; i < 4 * spec.n; ++i) {
    const EdgeRef e = edge_ref(i);
    const CornerRef v{e.square, terminal_corner(e.side)};
    const CornerRef t = spec.phi_of(v);
    psi.map[i] = EdgeRef{t.square, side_from_initial(t.corner, color(e.side))};
  }
  return psi;
}

namespace {

void collect_orbits(const EdgeBijection& psi, Color col,
                    std::vector<std::vector<EdgeRef>>& out) {
  std::vector<bool> visited(4 * psi.n, false);
  for (int i = 0; i < 4 * psi.n; ++i) {
    const EdgeRef start = edge_ref(i);
    if (color(start.side) != col || visited[i]) continue;
    // Edges are scanned in ascending order, so the first unvisited edge of
    // a cycle is its minimum.
    std::vector<EdgeRef> cycle;
    EdgeRef e = start;
    do {
      visited[edge_index(e)] = true;
      cycle.push_back(e);
      e = psi.apply(e);
    } while (e != start);
    out.push_back(std::move(cycle));
  }
}

}  // namespace

OrbitDecomposition orbit_decomposition(const EdgeBijection& psi) {
  validate(psi);
  OrbitDecomposition dec;
  collect_orbits(psi, Color::Black, dec.black_orbits);
  collect_orbits(psi, Color::White, dec.white_orbits);
  return dec;
}

std::vector<int> OrbitDecomposition::black_sizes() const {
  std::vector<int> s;
  for (const auto& o : black_orbits) s.push_back(static_cast<int>(o.size()));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> OrbitDecomposition::white_sizes() const {
  std::vector<int> s;
  for (const auto& o : white_orbits) s.push_back(static_cast<int>(o.size()));
  std::sort(s.begin(), s.end());
  return s;
}

CriterionReport criterion_check(const SbwSpec& spec) {
  const EdgeBijection psi = induced_edge_bijection(spec);
  const OrbitDecomposition dec = orbit_decomposition(psi);

  CriterionReport report;
  report.n = spec.n;
  report.black_orbit_count = static_cast<int>(dec.black_orbits.size());
  report.white_orbit_count = static_cast<int>(dec.white_orbits.size());
  report.orbit_count = dec.total();
  report.chi = -spec.n + report.orbit_count;

  // Squares are connected exactly when phi links them.
  UnionFind uf(spec.n);
  for (int p = 0; p < 2 * spec.n; ++p)
    uf.unite(positive_corner(p).square - 1, spec.phi[p].square - 1);
  report.connected = uf.count() == 1;

  // The count alone does not force connectivity: a sphere component plus a
  // torus component also sums to n + 2. Only a single sphere describes an
  // alternating link exterior.
  report.verdict = report.orbit_count == spec.n + 2 && report.connected;

  // Component roots in order of their minimal square.
  std::vector<int> root_order;
  std::vector<int> comp_of_root(spec.n, -1);
  for (int sq = 0; sq < spec.n; ++sq) {
    const int r = uf.find(sq);
    if (comp_of_root[r] < 0) {
      comp_of_root[r] = static_cast<int>(root_order.size());
      root_order.push_back(r);
    }
  }
  report.components.resize(root_order.size());
  for (int sq = 0; sq < spec.n; ++sq)
    report.components[comp_of_root[uf.find(sq)]].squares.push_back(sq + 1);

  auto count_component_orbits = [&](const std::vector<std::vector<EdgeRef>>& orbits) {
    for (const auto& orbit : orbits)
      report.components[comp_of_root[uf.find(orbit.front().square - 1)]].orbit_count++;
  };
  count_component_orbits(dec.black_orbits);
  count_component_orbits(dec.white_orbits);

  for (auto& comp : report.components) {
    comp.chi = -static_cast<int>(comp.squares.size()) + comp.orbit_count;
    // The surface built from a component is closed and orientable, so its
    // Euler characteristic is even.
    assert((2 - comp.chi) % 2 == 0);
    comp.genus = (2 - comp.chi) / 2;
  }
  return report;
}

namespace {

// Encoding minimized by canonical_form: byte n, then for each square
// 1..n the targets of its SE and NW corners as (square, corner) byte pairs
// with SW=0, NE=1.
void encode_spec(const SbwSpec& spec, std::vector<std::uint8_t>& out) {
  out.clear();
  out.push_back(static_cast<std::uint8_t>(spec.n));
  for (int p = 0; p < 2 * spec.n; ++p) {
    out.push_back(static_cast<std::uint8_t>(spec.phi[p].square));
    out.push_back(spec.phi[p].corner == Corner::NE ? 1 : 0);
  }
}

constexpr int kCanonicalMaxN = 8;

}  // namespace

SbwSpec apply_isomorphism(const SbwSpec& spec, const std::vector<int>& new_of_old,
                          const std::vector<bool>& rotate) {
  validate(spec);
  if (static_cast<int>(new_of_old.size()) != spec.n ||
      static_cast<int>(rotate.size()) != spec.n)
    throw InvalidInput("isomorphism data must cover all squares");
  auto map_corner = [&](const CornerRef& c) {
    const Corner k = rotate[c.square - 1] ? rotate180(c.corner) : c.corner;
    return CornerRef{new_of_old[c.square - 1], k};
  };
  SbwSpec out;
  out.n = spec.n;
  out.phi.resize(2 * spec.n);
  for (int p = 0; p < 2 * spec.n; ++p) {
    const CornerRef src = map_corner(positive_corner(p));
    out.phi[positive_index(src)] = map_corner(spec.phi[p]);
  }
  validate(out);
  return out;
}

std::vector<std::uint8_t> canonical_form(const SbwSpec& spec) {
  validate(spec);
  if (spec.n > kCanonicalMaxN)
    throw InvalidInput("canonical form is exhaustive and limited to n <= " +
                       std::to_string(kCanonicalMaxN));
  const int n = spec.n;

  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cand;
  cand.reserve(1 + 4 * n);

  // old_of_new[i] = old square placed at new index i+1.
  std::vector<int> old_of_new(n);
  std::iota(old_of_new.begin(), old_of_new.end(), 1);
  std::vector<int> new_of_old(n);
  do {
    for (int i = 0; i < n; ++i) new_of_old[old_of_new[i] - 1] = i + 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      // rotation bit of OLD square j is bit (j-1) of mask
      cand.clear();
      cand.push_back(static_cast<std::uint8_t>(n));
      bool worse = false;
      bool better = best.empty();
      for (int i = 1; i <= n && !worse; ++i) {
        const int j = old_of_new[i - 1];
        const bool rj = (mask >> (j - 1)) & 1u;
        for (const Corner src_new : {Corner::SE, Corner::NW}) {
          // New corner (i, src_new) is the image of old corner (j, c_src).
          const Corner c_src = rj ? rotate180(src_new) : src_new;
          const CornerRef t = spec.phi_of({j, c_src});
          const bool rk = (mask >> (t.square - 1)) & 1u;
          const Corner t_new = rk ? rotate180(t.corner) : t.corner;
          cand.push_back(static_cast<std::uint8_t>(new_of_old[t.square - 1]));
          cand.push_back(t_new == Corner::NE ? 1 : 0);
          if (!better) {
            // Incremental lexicographic comparison against the best prefix.
            const std::size_t k = cand.size();
            for (std::size_t b = k - 2; b < k; ++b) {
              if (cand[b] < best[b]) { better = true; break; }
              if (cand[b] > best[b]) { worse = true; break; }
            }
            if (worse) break;
          }
        }
      }
      if (!worse && (better || best.empty())) best = cand;
    }
  } while (std::next_permutation(old_of_new.begin(), old_of_new.end()));
  return best;
}

bool isomorphic(const SbwSpec& a, const SbwSpec& b) {
  if (a.n != b.n) {
    validate(a);
    validate(b);
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace sbw
