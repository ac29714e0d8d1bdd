#include "sbw/core_types.hpp"

namespace sbw {

const char* to_string(Corner c) {
  switch (c) {
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
    case Corner::NE: return "NE";
    default:         return "NW";
  }
}

const char* to_string(Side s) {
  switch (s) {
    case Side::S: return "S";
    case Side::N: return "N";
    case Side::W: return "W";
    default:      return "E";
  }
}

const char* to_string(Color c) { return c == Color::Black ? "black" : "white"; }

std::string to_string(const CornerRef& c) {
  return std::to_string(c.square) + "." + to_string(c.corner);
}

std::string to_string(const EdgeRef& e) {
  return std::to_string(e.square) + "." + to_string(e.side);
}

}  // namespace sbw
