#pragma once

// Recognition of unknotting crossings and classification of the knot K_D
// attached to a marked alternating diagram: unknot, torus, satellite or
// hyperbolic.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "altknot/goeritz.hpp"
#include "altknot/moves.hpp"
#include "altknot/tangle.hpp"

namespace altknot {

// ---------------------------------------------------------------------------
// Unknotting crossings

struct Reduction {
  bool unknot = false;
  std::vector<int> crossings;  // crossing count before each step
  std::vector<std::string> sites;
};

// Repeated flyped-tongue reduction; true when an unknotted clasp (or the
// crossingless diagram) is reached.
inline Reduction reduce_almost_alternating(AlmostAltDiagram a) {
  Reduction r;
  while (true) {
    r.crossings.push_back(a.crossing_count());
    if (a.crossing_count() == 0 || is_unknotted_clasp(a)) {
      r.unknot = true;
      return r;
    }
    const auto site = find_flyped_tongue(a);
    if (!site) return r;
    r.sites.push_back(site_code(*site));
    a = reduce_flyped_tongue(a, *site);
  }
}

inline bool is_unknot_almost_alternating(const AlmostAltDiagram& a) { return reduce_almost_alternating(a).unknot; }

inline AlmostAltDiagram change_crossing(const MarkedDiagram& d) {
  return {Diagram{switch_vertex(d.diagram.map, d.marked)}, d.marked};
}

inline bool verify_unknotting_crossing(const MarkedDiagram& d) {
  const PlanarMap& m = d.diagram.map;
  if (m.boundary_vertex() >= 0 || component_count(m) != 1) throw ComponentError("verification needs a knot diagram");
  if (!is_alternating(m) || !is_reduced(m)) throw TopologyError("verification needs a reduced alternating diagram");
  if (d.marked < 0 || d.marked >= m.vertex_count()) throw Error("marked crossing out of range");
  return is_unknot_almost_alternating(change_crossing(d));
}

inline MarkedDiagram verified(MarkedDiagram d) {
  d.verified = verify_unknotting_crossing(d) ? Verification::unknotting : Verification::not_unknotting;
  return d;
}

// ---------------------------------------------------------------------------
// Unknotting tangles

// Fraction of the switched single crossing in the insertion frame.
inline Fraction switched_crossing_fraction() { return {-1, 1}; }

// Changing c_T gives the switched single crossing relative to the boundary.
// The switched tangle is reduced by flyped tongues until its rational form
// can be read off.
inline bool is_unknotting_tangle(const Tangle& t, int c_t) {
  if (c_t < 0 || c_t >= t.map.vertex_count() || !t.map.is_crossing(c_t)) return false;
  AlmostAltDiagram a{Diagram{switch_vertex(t.map, c_t)}, c_t};
  while (true) {
    const Tangle cur = tangle_from_map(a.diagram.map);
    const RationalResult r = rational_decomposition(cur);
    if (r.rational) return r.fraction == switched_crossing_fraction();
    if (a.dealternator < 0) return false;
    const auto site = find_flyped_tongue(a);
    if (!site) return false;
    a = reduce_flyped_tongue(a, *site);
  }
}

inline Tangle single_crossing_tangle() {
  Tangle t;
  t.boundary = t.map.add_vertex(VertexKind::boundary);
  const int x = t.map.add_vertex(VertexKind::crossing);
  for (int j = 0; j < 4; ++j) t.map.link(make_dart(t.boundary, j), make_dart(x, -j));
  t.marked = x;
  return t;
}

// ---------------------------------------------------------------------------
// Crossing signs and 2-bridge diagrams

// +1 when the over-strand enters at the port before the incoming under port.
inline int crossing_sign(const PlanarMap& m, int v) {
  std::vector<int> in_port(m.dart_count(), 0);
  const Dart start = make_dart(v, 0);
  Dart cur = start;
  do {
    const Dart in = m.partner[cur];
    in_port[in] = 1;
    cur = rotate(in, 2);
  } while (cur != start);
  int under_in = -1, over_in = -1;
  for (int p = 0; p < 4; ++p) {
    if (!in_port[make_dart(v, p)]) continue;
    if (p & 1)
      over_in = p;
    else
      under_in = p;
  }
  if (under_in < 0 || over_in < 0) throw ComponentError("crossing sign needs a knot");
  return ((under_in + 3) & 3) == over_in ? 1 : -1;
}

struct TwoBridge {
  long long p = 0;
  long long q = 0;  // 0 <= q < p
};

inline long long mod(long long a, long long m) { return ((a % m) + m) % m; }

inline std::optional<long long> mod_inverse(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r) {
    const long long k = g / r;
    std::tie(g, r) = std::pair{r, g - k * r};
    std::tie(x, x1) = std::pair{x1, x - k * x1};
  }
  if (g != 1) return std::nullopt;
  return mod(x, m);
}

namespace detail {

inline std::optional<TwoBridge> two_bridge_from_crossings(const PlanarMap& m, long long det) {
  for (int x = 0; x < m.vertex_count(); ++x) {
    if (!m.is_crossing(x)) continue;
    const RationalResult r = rational_decomposition(excise_crossing(Diagram{m}, x));
    if (!r.rational) continue;
    const long long a = r.fraction.p, b = r.fraction.q;
    if (a + b != det) throw TopologyError("excision fraction does not match the determinant");
    return TwoBridge{det, mod(b, det)};
  }
  return std::nullopt;
}

}  // namespace detail

// Some visible Conway circle has rational tangles on both sides.
inline bool has_rational_splitting(const Diagram& d) {
  const PlanarMap& m = d.map;
  if (m.crossing_count() <= 2) return true;
  for (int x = 0; x < m.vertex_count(); ++x)
    if (is_rational(excise_crossing(d, x))) return true;
  const Faces f = compute_faces(m);
  for (const ConwayCircle& c : conway_circles(m, f)) {
    std::vector<char> other(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) other[v] = c.left_side[v] ? 0 : 1;
    if (side_size(c.left_side) < 2 || side_size(other) < 2) continue;
    if (is_rational(tangle_from_side(m, c.left_side, c.ring(true, m))) &&
        is_rational(tangle_from_side(m, other, c.ring(false, m))))
      return true;
  }
  return false;
}

// 2-bridge fraction p/q of a reduced alternating knot diagram, or nullopt.
// q is read from a crossing whose complement is rational, searching the
// flype class when no such crossing is visible.
inline std::optional<TwoBridge> is_2bridge(const Diagram& d) {
  if (!has_rational_splitting(d)) return std::nullopt;
  const long long det = goeritz_determinant(d);
  std::optional<TwoBridge> out;
  flype_orbit(d.map, -1, [&](int i, const FlypeOrbit& o) {
    out = detail::two_bridge_from_crossings(o.maps[i], det);
    return out.has_value();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Torus knots

struct TorusKnot {
  int r = 0;
  int s = 0;
  bool operator==(const TorusKnot&) const = default;
};

// Alexander polynomial at -1: the determinant with the sign making it
// 1 mod 4.
inline long long signed_determinant(long long det) { return mod(det, 4) == 1 ? det : -det; }

// Numerator m of the half-integral surgery m/2 on K_D giving the double
// branched cover of D.
inline long long surgery_numerator(const MarkedDiagram& d, long long det) {
  return -crossing_sign(d.diagram.map, d.marked) * signed_determinant(det);
}

// T(r,s) with r >= 2, |s| >= 2 and 2rs + e = m for e = +-1, whose m/2
// surgery L(m, 2r^2) matches L(p, q) as oriented lens spaces. m is +-p.
// Empty when only degenerate (unknot) solutions exist.
inline std::vector<TorusKnot> torus_parameters(long long m, long long q) {
  const long long p = std::llabs(m);
  std::vector<TorusKnot> out;
  if (p < 3) return out;
  const long long qq = mod(m > 0 ? q : -q, p);
  const auto qi = mod_inverse(qq, p);
  for (long long e : {1LL, -1LL}) {
    const long long rs2 = m - e;
    if (rs2 % 2 != 0) continue;
    const long long rs = rs2 / 2;
    for (long long r = 2; r * r <= std::llabs(rs); ++r) {
      if (rs % r != 0) continue;
      const long long s = rs / r;
      if (std::llabs(s) < 2 || std::gcd(r, std::llabs(s)) != 1) continue;
      // T(r,s) = T(s,r): either parameter may carry the 2r^2 residue
      for (long long rr : {r, std::llabs(s)}) {
        const long long t = mod(2 * rr * rr, p);
        if (t == qq || (qi && t == *qi)) {
          const TorusKnot k{static_cast<int>(r), static_cast<int>(s)};
          if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
        }
      }
    }
  }
  return out;
}

inline int torus_genus(const TorusKnot& k) { return (std::abs(k.r) - 1) * (std::abs(k.s) - 1) / 2; }

// ---------------------------------------------------------------------------
// Conway spheres

struct ConwaySphere {
  std::array<Dart, 4> cut{};      // interior darts of the cut edges, counterclockwise around the interior
  std::vector<char> interior;     // vertex mask, contains the marked crossing

  int interior_count() const { return side_size(interior); }
  int exterior_count() const { return static_cast<int>(interior.size()) - interior_count(); }
};

// Simple closed curves meeting the diagram in four edges, with the marked
// crossing inside and crossings on both sides.
inline std::vector<ConwaySphere> visible_conway_spheres(const MarkedDiagram& d) {
  const PlanarMap& m = d.diagram.map;
  std::vector<ConwaySphere> out;
  std::set<std::vector<char>> seen;
  for (const ConwayCircle& c : conway_circles(m)) {
    if (!c.left_side[d.marked]) continue;
    ConwaySphere s{c.left, c.left_side};
    if (s.exterior_count() == 0) continue;
    if (!seen.insert(s.interior).second) continue;
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<char> complement(const std::vector<char>& mask) {
  std::vector<char> out(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) out[i] = mask[i] ? 0 : 1;
  return out;
}

inline Tangle exterior_tangle(const MarkedDiagram& d, const ConwaySphere& cs) {
  const PlanarMap& m = d.diagram.map;
  const std::array<Dart, 4> ring{m.partner[cs.cut[3]], m.partner[cs.cut[2]], m.partner[cs.cut[1]], m.partner[cs.cut[0]]};
  return tangle_from_side(m, complement(cs.interior), ring);
}

// The interior in the insertion frame: alternating, with the marked crossing
// distinguished.
inline Tangle interior_tangle(const MarkedDiagram& d, const ConwaySphere& cs) {
  const PlanarMap& m = d.diagram.map;
  int marked = 0;
  for (int v = 0; v < d.marked; ++v) marked += cs.interior[v] ? 1 : 0;
  for (int first = 0; first < 2; ++first) {
    Tangle t = tangle_from_side(m, cs.interior, cs.cut, first);
    t.marked = marked;
    if (is_alternating(t.map)) return t;
  }
  throw TopologyError("interior tangle is not alternating in either frame");
}

inline bool is_substantial(const MarkedDiagram& d, const ConwaySphere& cs) {
  return cs.interior_count() > 1 && !is_rational(exterior_tangle(d, cs));
}

inline std::vector<ConwaySphere> substantial_spheres(const MarkedDiagram& d) {
  std::vector<ConwaySphere> out;
  for (ConwaySphere& s : visible_conway_spheres(d))
    if (is_substantial(d, s)) out.push_back(std::move(s));
  std::stable_sort(out.begin(), out.end(),
                   [](const ConwaySphere& a, const ConwaySphere& b) { return a.interior_count() < b.interior_count(); });
  return out;
}

// Replaces the interior by a single crossing, chosen so that the result is
// alternating; that crossing is marked.
inline MarkedDiagram collapse_interior(const MarkedDiagram& d, const ConwaySphere& cs) {
  const PlanarMap& m = d.diagram.map;
  for (int first = 0; first < 2; ++first) {
    PlanarMap out = m;
    const int x = out.add_vertex(VertexKind::crossing);
    for (int k = 0; k < 4; ++k) out.link(make_dart(x, k), m.partner[cs.cut[(first + k) & 3]]);
    std::vector<char> drop = cs.interior;
    drop.push_back(0);
    for (int v = 0; v < m.vertex_count(); ++v)
      if (drop[v])
        for (int p = 0; p < 4; ++p) out.partner[make_dart(v, p)] = -1;
    const std::vector<int> remap = compact(out, drop);
    if (is_alternating(out)) return {Diagram{out}, remap[x], Verification::unverified};
  }
  throw TopologyError("no alternating collapse of the sphere interior");
}

// Grows the sphere, across flypes fixing c if needed, to the smallest
// substantial sphere containing it whose interior is an alternating
// unknotting tangle. Returns the input unchanged when there is none.
inline std::pair<MarkedDiagram, ConwaySphere> maximize_interior(const MarkedDiagram& d, const ConwaySphere& cs) {
  std::optional<std::pair<MarkedDiagram, ConwaySphere>> best;
  auto consider = [&](const MarkedDiagram& x) {
    for (ConwaySphere& s : substantial_spheres(x)) {
      bool contains = true;
      for (std::size_t v = 0; v < cs.interior.size() && contains; ++v)
        if (cs.interior[v] && !s.interior[v]) contains = false;
      if (!contains) continue;
      if (best && best->second.interior_count() <= s.interior_count()) continue;
      const Tangle t = interior_tangle(x, s);
      if (!is_unknotting_tangle(t, t.marked)) continue;
      best = std::pair{x, std::move(s)};
    }
  };
  consider(d);
  if (!best || best->second.interior_count() > cs.interior_count()) {
    flype_orbit(d.diagram.map, d.marked, [&](int i, const FlypeOrbit& o) {
      if (i > 0) consider({Diagram{o.maps[i]}, d.marked, d.verified});
      return best && best->second.interior_count() == cs.interior_count();
    });
  }
  if (!best) return {d, cs};
  return *best;
}

// The companion: the interior of a sphere whose interior is an unknotting
// tangle collapsed to its single crossing.
inline MarkedDiagram extract_companion(const MarkedDiagram& d, const ConwaySphere& cs) {
  const Tangle t = interior_tangle(d, cs);
  if (!is_unknotting_tangle(t, t.marked)) throw TopologyError("sphere interior is not an unknotting tangle");
  return collapse_interior(d, cs);
}

// The sphere bounding exactly the given crossings, if there is one.
inline std::optional<ConwaySphere> sphere_around(const MarkedDiagram& d, const std::vector<char>& interior) {
  for (ConwaySphere& s : visible_conway_spheres(d))
    if (s.interior == interior) return std::move(s);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classification

enum class TypeKind { unknot, torus, satellite, hyperbolic };

inline const char* to_string(TypeKind k) {
  switch (k) {
    case TypeKind::unknot: return "Unknot";
    case TypeKind::torus: return "Torus";
    case TypeKind::satellite: return "Satellite";
    case TypeKind::hyperbolic: return "Hyperbolic";
  }
  return "?";
}

struct GeometricType {
  TypeKind kind = TypeKind::hyperbolic;
  TorusKnot torus;                          // Torus only
  std::vector<TorusKnot> alternatives;      // further torus solutions, if ambiguous
  std::optional<MarkedDiagram> companion;   // Satellite only

  bool same_constructor(const GeometricType& o) const { return kind == o.kind; }
};

inline std::string describe(const GeometricType& g) {
  switch (g.kind) {
    case TypeKind::torus: return "Torus(" + std::to_string(g.torus.r) + "," + std::to_string(g.torus.s) + ")";
    case TypeKind::satellite: return "Satellite";
    default: return to_string(g.kind);
  }
}

inline bool is_clasp_diagram(const MarkedDiagram& d) { return is_rational(excise_crossing(d)); }

inline GeometricType classify(const MarkedDiagram& d) {
  if (!verify_unknotting_crossing(d)) throw Error("marked crossing is not an unknotting crossing");
  GeometricType g;
  if (is_clasp_diagram(d)) {
    g.kind = TypeKind::unknot;
    return g;
  }
  if (const auto tb = is_2bridge(d.diagram)) {
    const long long m = surgery_numerator(d, tb->p);
    const auto sols = torus_parameters(m, tb->q);
    if (sols.empty()) throw TopologyError("2-bridge diagram without torus parameters");
    g.kind = TypeKind::torus;
    g.torus = sols.front();
    g.alternatives.assign(sols.begin() + 1, sols.end());
    return g;
  }
  for (const ConwaySphere& s : substantial_spheres(d)) {
    auto [x, big] = maximize_interior(d, s);
    const Tangle t = interior_tangle(x, big);
    if (!is_unknotting_tangle(t, t.marked)) continue;
    g.kind = TypeKind::satellite;
    g.companion = collapse_interior(x, big);
    return g;
  }
  g.kind = TypeKind::hyperbolic;
  return g;
}

}  // namespace altknot
