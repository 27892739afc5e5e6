#pragma once

// The move calculus on marked diagrams: flypes fixing the marked crossing,
// tongue and twirl moves, and the flyped-tongue reduction of almost
// alternating diagrams.
//
// Map-level functions take an almost alternating map together with its
// dealternator; they also work on tangle maps, where moves never touch the
// boundary vertex.

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "altknot/canonical.hpp"
#include "altknot/conway.hpp"
#include "altknot/reidemeister.hpp"
#include "altknot/tangle.hpp"

namespace altknot {

enum class MoveKind { flype, tongue, twirl };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::flype: return "flype";
    case MoveKind::tongue: return "tongue";
    case MoveKind::twirl: return "twirl";
  }
  return "?";
}

struct MoveRecord {
  MoveKind kind = MoveKind::flype;
  int delta = 0;
  std::string site;

  bool operator==(const MoveRecord&) const = default;
};

// Dedup key of a map with a distinguished crossing. Tangle maps are keyed
// relative to their boundary, closed diagrams up to relabeling and turnover.
inline std::string state_key(const PlanarMap& m, int marked) {
  const int b = m.boundary_vertex();
  if (b >= 0) return key_string(label_from(m, make_dart(b, NW), 1, marked).code);
  return key_string(minimal_labeling(m, marked >= 0 ? vertex_darts(marked) : all_crossing_darts(m), marked).code);
}

// ---------------------------------------------------------------------------
// Flypes

inline std::string site_code(const FlypeSite& s) {
  std::string out = "t" + std::to_string(s.crossing) + "@";
  for (int k = 0; k < 4; ++k) out += (k ? "," : "") + std::to_string(s.ring[k]);
  return out + "/" + std::to_string(s.index);
}

inline std::vector<FlypeSite> find_flypes(const MarkedDiagram& d) { return flype_sites(d.diagram.map, d.marked); }

inline MarkedDiagram apply_flype(const MarkedDiagram& d, const FlypeSite& s) {
  if (s.crossing == d.marked) throw Error("flype would carry the marked crossing");
  return {Diagram{apply_flype(d.diagram.map, s)}, d.marked, d.verified};
}

// Breadth-first flype orbit of `m` with `fixed` never carried. parent[i] and
// via[i] record how element i was reached.
struct FlypeOrbit {
  std::vector<PlanarMap> maps;
  std::vector<int> parent;
  std::vector<FlypeSite> via;

  std::vector<FlypeSite> path_to(int i) const {
    std::vector<FlypeSite> out;
    for (; i > 0; i = parent[i]) out.push_back(via[i]);
    return {out.rbegin(), out.rend()};
  }
};

// Expands lazily; `visit` returns true to stop.
template <class Visit>
inline FlypeOrbit flype_orbit(const PlanarMap& m, int fixed, Visit&& visit, std::size_t limit = 1u << 20) {
  FlypeOrbit o;
  std::unordered_set<std::string> seen{state_key(m, fixed)};
  o.maps.push_back(m);
  o.parent.push_back(-1);
  o.via.emplace_back();
  for (std::size_t i = 0; i < o.maps.size(); ++i) {
    if (visit(static_cast<int>(i), o)) return o;
    if (o.maps.size() >= limit) continue;
    for (FlypeSite& s : flype_sites(o.maps[i], fixed)) {
      PlanarMap n = apply_flype(o.maps[i], s);
      if (!seen.insert(state_key(n, fixed)).second) continue;
      o.maps.push_back(std::move(n));
      o.parent.push_back(static_cast<int>(i));
      o.via.push_back(std::move(s));
    }
  }
  return o;
}

inline FlypeOrbit flype_orbit(const PlanarMap& m, int fixed) {
  return flype_orbit(m, fixed, [](int, const FlypeOrbit&) { return false; });
}

// All flype-equivalent versions of a marked diagram, the input first.
inline std::vector<MarkedDiagram> flype_class(const MarkedDiagram& d) {
  std::vector<MarkedDiagram> out;
  for (PlanarMap& m : flype_orbit(d.diagram.map, d.marked).maps) out.push_back({Diagram{std::move(m)}, d.marked, d.verified});
  return out;
}

// ---------------------------------------------------------------------------
// Tongue moves

struct TongueSite {
  Dart kink_edge = -1;  // dart at the dealternator whose edge gets a kink; -1 for none
  int kink_loop = 0;
  Finger finger;
  Triangle triangle;
};

inline std::string site_code(const TongueSite& s) {
  std::string out;
  if (s.kink_edge >= 0) out += "k" + std::to_string(s.kink_edge) + "." + std::to_string(s.kink_loop) + " ";
  out += "f" + std::to_string(s.finger.pushed) + "," + std::to_string(s.finger.target) + (s.finger.over ? "o" : "u");
  out += " r" + std::to_string(s.triangle.face[0]) + "," + std::to_string(s.triangle.face[1]) + "," +
         std::to_string(s.triangle.face[2]);
  return out;
}

struct TongueResult {
  TongueSite site;
  PlanarMap map;       // almost alternating result
  int dealternator = -1;
};

namespace detail {

inline PlanarMap tongue_base(const PlanarMap& w, const TongueSite& s) {
  return s.kink_edge >= 0 ? apply_kink(w, Kink{s.kink_edge, s.kink_loop}) : w;
}

}  // namespace detail

// Tongue moves on an almost alternating map `w` with dealternator `b`: an
// optional kink next to b, a finger move inside one face, then a
// Reidemeister III move on a triangle through b and a new crossing. Only
// reduced almost alternating results are kept.
inline std::vector<TongueResult> tongue_candidates(const PlanarMap& w, int b, int max_crossings) {
  std::vector<TongueResult> out;
  std::vector<TongueSite> bases{TongueSite{}};
  for (int p = 0; p < 4; ++p)
    for (int j = 0; j < 4; ++j) bases.push_back(TongueSite{make_dart(b, p), j, {}, {}});
  for (const TongueSite& base : bases) {
    const PlanarMap w1 = detail::tongue_base(w, base);
    if (w1.crossing_count() + 2 > max_crossings) continue;
    const Faces f = compute_faces(w1);
    const int n1 = w1.vertex_count();
    for (const auto& ds : f.darts)
      for (const Dart d1 : ds)
        for (const Dart d2 : ds) {
          if (d1 == d2 || w1.partner[d1] == d2) continue;
          for (const bool over : {true, false}) {
            const Finger fg{d1, d2, over};
            const PlanarMap y = apply_finger(w1, fg);
            for (const Triangle& t : r3_sites(y)) {
              if (!t.contains(b) || !(t.contains(n1) || t.contains(n1 + 1))) continue;
              PlanarMap x = apply_r3(y, t);
              const int dx = dealternator(x);
              if (dx < 0 || !is_reduced(x)) continue;
              TongueSite s = base;
              s.finger = fg;
              s.triangle = t;
              out.push_back({s, std::move(x), dx});
            }
          }
        }
  }
  return out;
}

inline MarkedDiagram marked_from_almost_alternating(const PlanarMap& x, int dx) {
  return {Diagram{switch_vertex(x, dx)}, dx, Verification::unverified};
}

// Tongue moves of a reduced alternating marked diagram. Results are distinct
// up to canonical code.
inline std::vector<std::pair<TongueSite, MarkedDiagram>> tongue_moves(const MarkedDiagram& d, int max_crossings) {
  std::vector<std::pair<TongueSite, MarkedDiagram>> out;
  std::unordered_set<std::string> seen;
  const PlanarMap w = switch_vertex(d.diagram.map, d.marked);
  for (TongueResult& r : tongue_candidates(w, d.marked, max_crossings)) {
    MarkedDiagram md = marked_from_almost_alternating(r.map, r.dealternator);
    if (!seen.insert(key_string(canonical_key(md))).second) continue;
    out.emplace_back(r.site, std::move(md));
  }
  return out;
}

inline std::vector<TongueSite> tongue_sites(const MarkedDiagram& d, int max_crossings = 1 << 20) {
  std::vector<TongueSite> out;
  for (auto& [s, md] : tongue_moves(d, max_crossings)) out.push_back(s);
  return out;
}

inline MarkedDiagram apply_tongue(const MarkedDiagram& d, const TongueSite& s) {
  const PlanarMap w = switch_vertex(d.diagram.map, d.marked);
  const PlanarMap w1 = detail::tongue_base(w, s);
  const int n1 = w1.vertex_count();
  const PlanarMap y = apply_finger(w1, s.finger);
  const Triangle& t = s.triangle;
  if (!t.contains(d.marked) || !(t.contains(n1) || t.contains(n1 + 1))) throw Error("invalid tongue site");
  bool found = false;
  for (const Triangle& u : r3_sites(y))
    if (u.face == t.face) found = true;
  if (!found) throw Error("invalid tongue site");
  const PlanarMap x = apply_r3(y, t);
  const int dx = dealternator(x);
  if (dx < 0 || !is_reduced(x)) throw Error("tongue site does not give a reduced almost alternating diagram");
  return marked_from_almost_alternating(x, dx);
}

inline MoveRecord tongue_record(const MarkedDiagram& before, const MarkedDiagram& after, const TongueSite& s) {
  return {MoveKind::tongue, after.crossing_count() - before.crossing_count(), site_code(s)};
}

// ---------------------------------------------------------------------------
// Twirl moves

constexpr int twirl_variant_count = 4;

// The rational unknotting tangle of a twirl, fraction 5/3 (even variants) or
// 3/5 (odd variants); variants 2 and 3 put c_T on the other side of the
// inner twist.
inline Tangle twirl_tangle(int variant) {
  if (variant < 0 || variant >= twirl_variant_count) throw Error("unknown twirl variant");
  Tangle t = horizontal_twist(zero_tangle(), 1);
  const bool other_side = variant >= 2;
  if ((variant & 1) == 0) {
    t = horizontal_twist(t, 1);
    t = twist(t, other_side ? 2 : 0, 1);
    t.marked = t.map.vertex_count() - 1;
    t = horizontal_twist(t, 1);
  } else {
    t = vertical_twist(t, 1);
    t = twist(t, other_side ? 3 : 1, 0);
    t.marked = t.map.vertex_count() - 1;
    t = vertical_twist(t, 1);
  }
  return t;
}

inline MarkedDiagram apply_twirl(const MarkedDiagram& d, int variant = 0) {
  return insert_tangle(d, twirl_tangle(variant));
}

inline MoveRecord twirl_record(const MarkedDiagram& before, const MarkedDiagram& after, int variant) {
  return {MoveKind::twirl, after.crossing_count() - before.crossing_count(), "v" + std::to_string(variant)};
}

// ---------------------------------------------------------------------------
// Flyped tongues

struct FlypedTongue {
  std::vector<FlypeSite> flypes;  // applied in order before the Reidemeister moves
  Triangle triangle;
  Bigon bigon;
};

inline std::string site_code(const FlypedTongue& s) {
  std::string out;
  for (const FlypeSite& f : s.flypes) out += site_code(f) + " ";
  out += "r" + std::to_string(s.triangle.face[0]) + "," + std::to_string(s.triangle.face[1]) + "," +
         std::to_string(s.triangle.face[2]);
  out += " b" + std::to_string(s.bigon.face[0]) + "," + std::to_string(s.bigon.face[1]);
  return out;
}

namespace detail {

// Reidemeister II removal of `bg` followed by Reidemeister I cleanup that
// keeps the new dealternator. nullopt when the result is not a smaller
// reduced almost alternating map (or the crossingless diagram). Tangles may
// also end alternating.
inline std::optional<AlmostAltDiagram> finish_reduction(const PlanarMap& y, const Bigon& bg, int original) {
  PlanarMap z = apply_r2(y, bg);
  int dz = dealternator(z);
  if (dz == -1) return std::nullopt;
  if (dz == -2) {
    remove_nugatory(z);
    if (z.crossing_count() != 0 && z.boundary_vertex() < 0) return std::nullopt;
    return AlmostAltDiagram{Diagram{z}, -1};
  }
  if (!r1_cleanup(z, dz)) return std::nullopt;
  if (z.crossing_count() >= original || dealternator(z) != dz || !is_reduced(z)) return std::nullopt;
  return AlmostAltDiagram{Diagram{z}, dz};
}

}  // namespace detail

// The dealternator lies in a bigon whose Reidemeister II removal, followed by
// Reidemeister I cleanup, leaves no crossings.
inline bool is_unknotted_clasp(const AlmostAltDiagram& a) {
  const PlanarMap& m = a.diagram.map;
  for (const Bigon& bg : r2_sites(m)) {
    if (!bg.contains(a.dealternator)) continue;
    PlanarMap z = apply_r2(m, bg);
    remove_nugatory(z);
    if (z.crossing_count() == 0 && z.boundary_vertex() < 0) return true;
  }
  return false;
}

inline std::optional<FlypedTongue> find_flyped_tongue(const AlmostAltDiagram& a) {
  if (a.dealternator < 0 || is_unknotted_clasp(a)) return std::nullopt;
  const int delta = a.dealternator;
  const int n0 = a.diagram.map.crossing_count();
  std::optional<FlypedTongue> found;
  flype_orbit(a.diagram.map, delta, [&](int i, const FlypeOrbit& o) {
    const PlanarMap& x = o.maps[i];
    for (const Triangle& t : r3_sites(x)) {
      if (!t.contains(delta)) continue;
      const PlanarMap y = apply_r3(x, t);
      for (const Bigon& bg : r2_sites(y)) {
        if (bg.contains(delta)) continue;
        if (!detail::finish_reduction(y, bg, n0)) continue;
        found = FlypedTongue{o.path_to(i), t, bg};
        return true;
      }
    }
    return false;
  });
  return found;
}

inline AlmostAltDiagram reduce_flyped_tongue(const AlmostAltDiagram& a, const FlypedTongue& s) {
  PlanarMap x = a.diagram.map;
  for (const FlypeSite& f : s.flypes) {
    if (f.crossing == a.dealternator) throw Error("flype would carry the dealternator");
    x = apply_flype(x, f);
  }
  const PlanarMap y = apply_r3(x, s.triangle);
  auto r = detail::finish_reduction(y, s.bigon, a.diagram.map.crossing_count());
  if (!r) throw Error("invalid flyped tongue site");
  return *r;
}

}  // namespace altknot
