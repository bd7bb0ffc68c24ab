#ifndef RAAG_SURFACE_HPP
#define RAAG_SURFACE_HPP

#include <algorithm>
#include <stdexcept>
#include <string>

#include "raag/error.hpp"

namespace raag {

// Compact surface up to homeomorphism: orientability, genus (crosscap count
// when nonorientable), marked points and boundary circles. Marked points and
// boundary circles are tracked separately so that gluing bookkeeping can
// convert between the two views.
struct SurfaceType {
  bool orientable = true;
  int genus = 0;
  int marked = 0;
  int boundary = 0;

  bool operator==(const SurfaceType&) const = default;
  auto operator<=>(const SurfaceType&) const = default;
};

inline void validate(const SurfaceType& s) {
  if (s.genus < 0 || s.marked < 0 || s.boundary < 0)
    throw input_error("surface: negative genus/marked/boundary");
  if (!s.orientable && s.genus < 1)
    throw input_error("surface: nonorientable genus must be >= 1");
}

inline SurfaceType surface(char kind, int genus, int marked, int boundary = 0) {
  SurfaceType s{kind == 'S', genus, marked, boundary};
  if (kind != 'S' && kind != 'N') throw input_error("surface kind must be 'S' or 'N'");
  validate(s);
  return s;
}

// Text notation: N{g,m} or S{g,m}, with optional +b boundary suffix.
inline SurfaceType parse_surface(const std::string& text) {
  auto fail = [&] { throw input_error("cannot parse surface '" + text + "' (expected e.g. N{1,6} or S{0,1}+3)"); };
  if (text.size() < 6 || (text[0] != 'N' && text[0] != 'S') || text[1] != '{') fail();
  auto comma = text.find(',');
  auto close = text.find('}');
  if (comma == std::string::npos || close == std::string::npos || comma > close) fail();
  int g = 0, m = 0, b = 0;
  try {
    g = std::stoi(text.substr(2, comma - 2));
    m = std::stoi(text.substr(comma + 1, close - comma - 1));
    if (close + 1 < text.size()) {
      if (text[close + 1] != '+') fail();
      b = std::stoi(text.substr(close + 2));
    }
  } catch (const std::exception&) {
    fail();
  }
  return surface(text[0], g, m, b);
}

inline std::string format_surface(const SurfaceType& s) {
  std::string out;
  out += s.orientable ? 'S' : 'N';
  out += '{' + std::to_string(s.genus) + ',' + std::to_string(s.marked) + '}';
  if (s.boundary > 0) out += '+' + std::to_string(s.boundary);
  return out;
}

// Boundary circles regarded as marked points.
inline SurfaceType as_marked(const SurfaceType& s) {
  return {s.orientable, s.genus, s.marked + s.boundary, 0};
}

// Marked points do not contribute.
inline int euler_characteristic(const SurfaceType& s) {
  return s.orientable ? 2 - 2 * s.genus - s.boundary : 2 - s.genus - s.boundary;
}

// Maximal number of disjoint, pairwise non-isotopic curves.
inline int xi(const SurfaceType& s) {
  SurfaceType t = as_marked(s);
  int raw = t.orientable ? 3 * t.genus + t.marked - 3 : 2 * t.genus + t.marked - 3;
  return std::max(raw, 0);
}

// Maximal number of disjoint, pairwise non-isotopic two-sided curves on a
// nonorientable surface. The three low-complexity surfaces have fixed values
// that the genus-parity formula does not cover.
inline int xi_two(const SurfaceType& s) {
  if (s.orientable) throw input_error("xi-two is defined for nonorientable surfaces only");
  SurfaceType t = as_marked(s);
  if (t.genus == 1 && t.marked <= 1) return 0;
  if (t.genus == 2 && t.marked == 0) return 1;
  int raw = (t.genus % 2 == 1) ? (3 * (t.genus - 1)) / 2 + t.marked - 2
                               : (3 * t.genus) / 2 + t.marked - 3;
  return std::max(raw, 0);
}

// Piece complexity used by the decomposition count: two-sided complexity for
// nonorientable pieces, ordinary complexity for orientable ones.
inline int zeta(const SurfaceType& s) {
  return s.orientable ? xi(s) : xi_two(s);
}

// The orientation double cover of a closed nonorientable N{g,m} is S{g-1,2m};
// Euler characteristic doubles.
inline SurfaceType orientation_double_cover(const SurfaceType& s) {
  if (s.orientable) throw input_error("double cover: input must be nonorientable");
  if (s.boundary != 0) throw input_error("double cover: input must be closed");
  return {true, s.genus - 1, 2 * s.marked, 0};
}

}  // namespace raag

#endif
