#pragma once

// Four-ended tangles: a planar map with one boundary vertex B whose ports are
// the ends NW=0, NE=1, SE=2, SW=3 (counterclockwise at B, so clockwise around
// the tangle disk).

#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "altknot/canonical.hpp"
#include "altknot/conway.hpp"
#include "altknot/reidemeister.hpp"

namespace altknot {

enum Corner : int { NW = 0, NE = 1, SE = 2, SW = 3 };

struct Tangle {
  PlanarMap map;
  int boundary = 0;
  int marked = -1;  // distinguished crossing, if any

  int crossing_count() const { return map.crossing_count(); }
  Dart end(int corner) const { return map.partner[make_dart(boundary, corner)]; }
};

// p/q in lowest terms with q >= 0; infinity is 1/0.
struct Fraction {
  long long p = 0;
  long long q = 1;

  static Fraction make(long long p, long long q) {
    if (p == 0 && q == 0) throw Error("0/0 is not a tangle fraction");
    const long long g = std::gcd(std::llabs(p), std::llabs(q));
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
      p = -p;
      q = -q;
    }
    return {p, q};
  }
  bool is_infinite() const { return q == 0; }
  bool operator==(const Fraction&) const = default;
  std::string str() const { return q == 0 ? "1/0" : std::to_string(p) + "/" + std::to_string(q); }
};

// Verifies the tangle shape: one boundary vertex, two arcs, no closed
// components.
inline void check_tangle(const Tangle& t) {
  check_structure(t.map);
  if (!is_connected(t.map)) throw TopologyError("tangle map is disconnected");
  int b = 0;
  for (int v = 0; v < t.map.vertex_count(); ++v)
    if (!t.map.is_crossing(v)) ++b;
  if (b != 1 || t.map.is_crossing(t.boundary)) throw TopologyError("tangle needs exactly one boundary vertex");
  const StrandCount sc = count_strands(t.map);
  if (sc.arcs != 2 || sc.closed != 0) throw ComponentError("tangle must consist of two arcs");
}

inline Tangle zero_tangle() {
  Tangle t;
  t.boundary = t.map.add_vertex(VertexKind::boundary);
  t.map.link(make_dart(0, NW), make_dart(0, NE));
  t.map.link(make_dart(0, SW), make_dart(0, SE));
  return t;
}

inline Tangle infinity_tangle() {
  Tangle t;
  t.boundary = t.map.add_vertex(VertexKind::boundary);
  t.map.link(make_dart(0, NW), make_dart(0, SW));
  t.map.link(make_dart(0, NE), make_dart(0, SE));
  return t;
}

// Adds a crossing against the side of B between ends `side` and `side`+1,
// with port s+1 towards end `side`. Sides 1 and 3 are horizontal twists,
// 0 and 2 vertical ones.
inline Tangle twist(const Tangle& t, int side, int s) {
  Tangle out = t;
  PlanarMap& m = out.map;
  const Dart e0 = make_dart(t.boundary, side), e1 = make_dart(t.boundary, side + 1);
  const Dart o0 = t.map.partner[e0], o1 = t.map.partner[e1];
  const int x = m.add_vertex(VertexKind::crossing);
  m.link(make_dart(x, s + 1), e0);
  m.link(make_dart(x, s), e1);
  if (o0 == e1) {
    m.link(make_dart(x, s + 2), make_dart(x, s + 3));
  } else {
    m.link(make_dart(x, s + 2), o0);
    m.link(make_dart(x, s + 3), o1);
  }
  return out;
}

// Sign of a twist added by twist(side, s), as the change of F (horizontal)
// or of 1/F (vertical).
inline int twist_sign(int side, int s) {
  const bool horizontal = (side & 1) != 0;
  const bool even = (s & 1) == 0;
  return horizontal == even ? 1 : -1;
}

// F -> F + e on the right side.
inline Tangle horizontal_twist(const Tangle& t, int e) {
  Tangle out = t;
  for (int i = 0; i < std::abs(e); ++i) out = twist(out, 1, e > 0 ? 0 : 1);
  return out;
}

// 1/F -> 1/F + e on the bottom side.
inline Tangle vertical_twist(const Tangle& t, int e) {
  Tangle out = t;
  for (int i = 0; i < std::abs(e); ++i) out = twist(out, 2, e > 0 ? 1 : 0);
  return out;
}

// Joins NW-NE and SW-SE (numerator) or NW-SW and NE-SE (denominator). The
// result may be a link or contain free loops.
inline Diagram numerator_closure(const Tangle& t) {
  PlanarMap m = t.map;
  smooth_vertex(m, t.boundary, NW);
  return {m};
}

inline Diagram denominator_closure(const Tangle& t) {
  PlanarMap m = t.map;
  smooth_vertex(m, t.boundary, NE);
  return {m};
}

// Canonical key of a tangle up to isotopy of the disk fixing the ends: the
// traversal always starts at NW.
inline std::vector<int> tangle_key(const Tangle& t) {
  return label_from(t.map, make_dart(t.boundary, NW), 1, t.marked).code;
}

// Reads the tangle from a map whose boundary vertex already has NW..SW ports.
inline Tangle tangle_from_map(const PlanarMap& m, int marked = -1) {
  Tangle t{m, m.boundary_vertex(), marked};
  if (t.boundary < 0) throw TopologyError("map has no boundary vertex");
  return t;
}

// Rebuilds the tangle with vertex 0 = B, remaining vertices in traversal
// order.
inline Tangle normalize(const Tangle& t) {
  const Labeling L = label_from(t.map, make_dart(t.boundary, NW), 1, t.marked);
  PlanarMap m = apply_labeling(t.map, L);
  int marked = -1;
  for (int i = 0; i < static_cast<int>(L.order.size()); ++i)
    if (L.order[i] == t.marked) marked = i;
  return {m, 0, marked};
}

// ---------------------------------------------------------------------------
// Cutting and gluing

// The complement of crossing c. B takes the place of c, so the rotation is
// kept: end j is the edge at port j+3 of c.
inline Tangle excise_crossing(const Diagram& d, int c) {
  auto phi = [c](Dart x) { return dart_vertex(x) == c ? make_dart(c, dart_port(x) + 1) : x; };
  Tangle t;
  t.map = d.map;
  t.map.kind[c] = VertexKind::boundary;
  for (Dart x = 0; x < d.map.dart_count(); ++x) t.map.partner[phi(x)] = phi(d.map.partner[x]);
  t.boundary = c;
  return t;
}

inline Tangle excise_crossing(const MarkedDiagram& d) { return excise_crossing(d.diagram, d.marked); }

// Glues the tangle into the place of crossing c: the end at port k of c is
// attached to tangle end -k. Returns the diagram with the tangle's marked
// crossing marked.
inline MarkedDiagram insert_tangle(const Diagram& host, int c, const Tangle& t) {
  PlanarMap m = host.map;
  const int offset = m.vertex_count();
  for (int v = 0; v < t.map.vertex_count(); ++v) m.add_vertex(t.map.kind[v]);
  for (Dart x = 0; x < t.map.dart_count(); ++x) m.partner[x + 4 * offset] = t.map.partner[x] + 4 * offset;
  const int b = t.boundary + offset;
  std::vector<char> gone(m.vertex_count(), 0);
  gone[c] = gone[b] = 1;
  auto through = [c, b](Dart x) {
    if (dart_vertex(x) == c) return make_dart(b, -dart_port(x));
    return make_dart(c, -dart_port(x));
  };
  const std::vector<int> remap = splice_out(m, gone, through);
  if (m.free_loops != host.map.free_loops) throw TopologyError("insertion closed off a component");
  const int marked = t.marked >= 0 ? remap[t.marked + offset] : -1;
  return {Diagram{m}, marked, Verification::unverified};
}

inline MarkedDiagram insert_tangle(const MarkedDiagram& host, const Tangle& t) {
  MarkedDiagram out = insert_tangle(host.diagram, host.marked, t);
  if (is_alternating(host.diagram.map) && !is_alternating(out.diagram.map))
    throw TopologyError("tangle orientation does not restore alternation");
  return out;
}

// The side of a 4-edge circle as a tangle. `ring` lists the crossed darts
// counterclockwise around the kept region; ring[k] becomes end -k relative
// to `first`.
inline Tangle tangle_from_side(const PlanarMap& m, const std::vector<char>& keep, const std::array<Dart, 4>& ring,
                               int first = 0) {
  PlanarMap out = m;
  std::vector<char> drop(m.vertex_count(), 0);
  for (int v = 0; v < m.vertex_count(); ++v) drop[v] = keep[v] ? 0 : 1;
  const int b = out.add_vertex(VertexKind::boundary);
  drop.push_back(0);
  for (int k = 0; k < 4; ++k) {
    const Dart inner = ring[(first + k) & 3];
    out.partner[m.partner[inner]] = -1;
    out.link(inner, make_dart(b, -k));
  }
  for (int v = 0; v < m.vertex_count(); ++v)
    if (drop[v])
      for (int p = 0; p < 4; ++p) out.partner[make_dart(v, p)] = -1;
  // Drop references from removed vertices only; kept ones are relinked.
  const std::vector<int> remap = compact(out, drop);
  return {out, remap[b], -1};
}

// ---------------------------------------------------------------------------
// Rational tangles

struct UntwistStep {
  bool horizontal = true;
  int sign = 1;
};

namespace detail {

// A crossing forming a twist against a side of B: returns (side, s) or
// (-1, -1).
inline std::pair<int, int> find_twist(const Tangle& t) {
  const PlanarMap& m = t.map;
  for (int side = 0; side < 4; ++side) {
    const Dart a = m.partner[make_dart(t.boundary, side)];
    const Dart b = m.partner[make_dart(t.boundary, side + 1)];
    const int x = dart_vertex(a);
    if (x != dart_vertex(b) || !m.is_crossing(x)) continue;
    if (dart_port(a) == ((dart_port(b) + 1) & 3)) return {side, dart_port(b)};
  }
  return {-1, -1};
}

// Removes nugatory crossings and non-alternating bigons. Returns true when
// anything changed.
inline bool simplify_once(Tangle& t) {
  {
    const Faces f = compute_faces(t.map);
    for (int v = 0; v < t.map.vertex_count(); ++v) {
      if (!t.map.is_crossing(v)) continue;
      const int s = nugatory_smoothing(t.map, f, v);
      if (s < 0) continue;
      const auto remap = smooth_vertex(t.map, v, s);
      t.boundary = remap[t.boundary];
      return true;
    }
  }
  const auto bigons = r2_sites(t.map);
  if (!bigons.empty()) {
    std::vector<int> remap;
    t.map = apply_r2(t.map, bigons.front(), &remap);
    t.boundary = remap[t.boundary];
    return true;
  }
  return false;
}

}  // namespace detail

struct RationalResult {
  bool rational = false;
  Fraction fraction;
  std::vector<UntwistStep> steps;  // outermost first
};

// Untwisting search: repeatedly strip twists against the boundary, removing
// nugatory crossings and bigons, and flype when nothing is exposed. Every
// element of the flype orbit is tried before giving up.
inline RationalResult rational_decomposition(const Tangle& input) {
  RationalResult r;
  Tangle t = input;
  t.marked = -1;
  while (true) {
    while (detail::simplify_once(t)) {
    }
    if (count_strands(t.map).closed != 0) return r;
    if (t.map.crossing_count() == 0) {
      const Dart nw = t.map.partner[make_dart(t.boundary, NW)];
      Fraction f = dart_port(nw) == NE ? Fraction{0, 1} : Fraction{1, 0};
      for (auto it = r.steps.rbegin(); it != r.steps.rend(); ++it) {
        if (it->horizontal)
          f = Fraction::make(f.p + it->sign * f.q, f.q);
        else
          f = Fraction::make(f.p, f.q + it->sign * f.p);
      }
      r.rational = true;
      r.fraction = f;
      return r;
    }
    auto [side, s] = detail::find_twist(t);
    if (side < 0) {
      // Search the flype orbit for a diagram exposing a twist or a
      // simplification.
      std::vector<PlanarMap> orbit{t.map};
      std::unordered_set<std::string> seen{key_string(label_from(t.map, make_dart(t.boundary, NW), 1, -1).code)};
      bool found = false;
      for (std::size_t i = 0; i < orbit.size() && !found; ++i) {
        for (const FlypeSite& site : flype_sites(orbit[i], -1)) {
          PlanarMap n = apply_flype(orbit[i], site);
          if (!seen.insert(key_string(label_from(n, make_dart(t.boundary, NW), 1, -1).code)).second) continue;
          Tangle cand{n, t.boundary, -1};
          Tangle probe = cand;
          if (detail::find_twist(cand).first >= 0 || detail::simplify_once(probe)) {
            t = cand;
            found = true;
            break;
          }
          orbit.push_back(std::move(n));
        }
      }
      if (!found) return r;
      continue;
    }
    const int x = dart_vertex(t.map.partner[make_dart(t.boundary, side)]);
    r.steps.push_back({(side & 1) != 0, twist_sign(side, s)});
    const auto remap = smooth_vertex(t.map, x, s + 1);
    t.boundary = remap[t.boundary];
  }
}

inline bool is_rational(const Tangle& t) { return rational_decomposition(t).rational; }

inline Fraction tangle_fraction(const Tangle& t) {
  const RationalResult r = rational_decomposition(t);
  if (!r.rational) throw TopologyError("tangle is not rational");
  return r.fraction;
}

// Twist knot with n half twists next to a clasp; the marked crossing is a
// clasp crossing, whose change unknots the diagram. `sign` picks the mirror.
inline MarkedDiagram clasp_diagram(int n, int sign) {
  if (n < 1) throw Error("clasp diagrams need n >= 1");
  auto build = [n](int e) {
    Tangle t = vertical_twist(infinity_tangle(), 2 * e);
    const int clasp = dart_vertex(t.end(SE));
    t = horizontal_twist(t, n * e);
    return std::pair{numerator_closure(t), clasp};
  };
  auto [d, clasp] = build(1);
  if (!is_alternating(d.map)) std::tie(d, clasp) = build(-1);
  // The closure removes B, which precedes every crossing.
  MarkedDiagram md{d, clasp - 1, Verification::unverified};
  if (sign < 0) md = mirror(md);
  return md;
}

}  // namespace altknot
