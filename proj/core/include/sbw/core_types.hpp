#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace sbw {

// Corners of the unit square, listed counterclockwise from the origin:
// SW=(0,0), SE=(1,0), NE=(1,1), NW=(0,1).
// SW and NE carry the sign -, SE and NW carry the sign +.
enum class Corner : std::uint8_t { SW = 0, SE = 1, NE = 2, NW = 3 };

// Sides of the square. S and N (horizontal) are black, W and E (vertical)
// are white. The numeric order S < N < W < E is the tie-break order used
// for orbit representatives and canonical encodings.
enum class Side : std::uint8_t { S = 0, N = 1, W = 2, E = 3 };

enum class Color : std::uint8_t { Black = 0, White = 1 };

constexpr int sign(Corner c) {
  return (c == Corner::SW || c == Corner::NE) ? -1 : +1;
}

constexpr bool is_positive(Corner c) { return sign(c) > 0; }

constexpr Color color(Side s) {
  return (s == Side::S || s == Side::N) ? Color::Black : Color::White;
}

// Every side is oriented from its - corner to its + corner.
constexpr Corner initial_corner(Side s) {
  switch (s) {
    case Side::S: return Corner::SW;
    case Side::N: return Corner::NE;
    case Side::W: return Corner::SW;
    default:      return Corner::NE;  // E
  }
}

constexpr Corner terminal_corner(Side s) {
  switch (s) {
    case Side::S: return Corner::SE;
    case Side::N: return Corner::NW;
    case Side::W: return Corner::NW;
    default:      return Corner::SE;  // E
  }
}

// The unique side of the given color whose initial corner is `neg`.
// `neg` must be a negative corner.
constexpr Side side_from_initial(Corner neg, Color col) {
  if (neg == Corner::SW) return col == Color::Black ? Side::S : Side::W;
  return col == Color::Black ? Side::N : Side::E;  // NE
}

// 180-degree rotation of the square: swaps SW<->NE and SE<->NW, and
// S<->N, W<->E. It preserves signs, colors, and edge orientations.
constexpr Corner rotate180(Corner c) {
  switch (c) {
    case Corner::SW: return Corner::NE;
    case Corner::SE: return Corner::NW;
    case Corner::NE: return Corner::SW;
    default:         return Corner::SE;  // NW
  }
}

constexpr Side rotate180(Side s) {
  switch (s) {
    case Side::S: return Side::N;
    case Side::N: return Side::S;
    case Side::W: return Side::E;
    default:      return Side::W;  // E
  }
}

const char* to_string(Corner c);
const char* to_string(Side s);
const char* to_string(Color c);

// A corner of one SBW square. Squares are numbered 1..n.
struct CornerRef {
  int square = 0;
  Corner corner = Corner::SW;

  friend auto operator<=>(const CornerRef&, const CornerRef&) = default;
};

// A side of one SBW square.
struct EdgeRef {
  int square = 0;
  Side side = Side::S;

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

std::string to_string(const CornerRef& c);  // "3.SW"
std::string to_string(const EdgeRef& e);    // "3.S"

// Dense indices used by the flat tables below.
// Positive corners in order 1.SE, 1.NW, 2.SE, 2.NW, ...
// Negative corners in order 1.SW, 1.NE, 2.SW, 2.NE, ...
// Edges in order 1.S, 1.N, 1.W, 1.E, 2.S, ...
constexpr int positive_index(const CornerRef& c) {
  return 2 * (c.square - 1) + (c.corner == Corner::SE ? 0 : 1);
}

constexpr int negative_index(const CornerRef& c) {
  return 2 * (c.square - 1) + (c.corner == Corner::SW ? 0 : 1);
}

constexpr CornerRef positive_corner(int index) {
  return {index / 2 + 1, index % 2 == 0 ? Corner::SE : Corner::NW};
}

constexpr CornerRef negative_corner(int index) {
  return {index / 2 + 1, index % 2 == 0 ? Corner::SW : Corner::NE};
}

constexpr int edge_index(const EdgeRef& e) {
  return 4 * (e.square - 1) + static_cast<int>(e.side);
}

constexpr EdgeRef edge_ref(int index) {
  return {index / 4 + 1, static_cast<Side>(index % 4)};
}

}  // namespace sbw
