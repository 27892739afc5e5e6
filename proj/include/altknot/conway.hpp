#pragma once

// Visible Conway circles (simple 4-cycles of the face-adjacency graph) and
// flypes across them.

#include <array>
#include <set>
#include <tuple>
#include <vector>

#include "altknot/planar_map.hpp"

namespace altknot {

// A simple closed curve meeting the map in four edges. `left` holds, for each
// crossed edge in the order the curve meets them, the dart on the curve's
// left-hand side; read in that order they run counterclockwise around the left
// region.
struct ConwayCircle {
  std::array<Dart, 4> left{};
  std::vector<char> left_side;  // vertex mask

  std::array<Dart, 4> ring(bool left_region, const PlanarMap& m) const {
    if (left_region) return left;
    return {m.partner[left[3]], m.partner[left[2]], m.partner[left[1]], m.partner[left[0]]};
  }
};

inline int side_size(const std::vector<char>& mask) {
  int n = 0;
  for (char c : mask) n += c ? 1 : 0;
  return n;
}

// Both regions of the circle; nullopt when the cycle is not a proper
// separating curve (cannot happen for simple dual cycles of connected maps).
inline std::optional<ConwayCircle> circle_from_darts(const PlanarMap& m, const std::array<Dart, 4>& left) {
  const int n = m.vertex_count();
  std::vector<char> cut(m.dart_count(), 0);
  for (Dart d : left) cut[d] = cut[m.partner[d]] = 1;
  std::vector<int> side(n, -1);
  auto flood = [&](int seed, int tag) {
    if (side[seed] >= 0) return side[seed] == tag;
    std::vector<int> stack{seed};
    side[seed] = tag;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        const Dart d = make_dart(v, p);
        if (cut[d]) continue;
        const int w = dart_vertex(m.partner[d]);
        if (side[w] < 0) {
          side[w] = tag;
          stack.push_back(w);
        } else if (side[w] != tag) {
          return false;
        }
      }
    }
    return true;
  };
  for (Dart d : left)
    if (!flood(dart_vertex(d), 0)) return std::nullopt;
  for (Dart d : left)
    if (!flood(dart_vertex(m.partner[d]), 1)) return std::nullopt;
  ConwayCircle c;
  c.left = left;
  c.left_side.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    if (side[v] < 0) return std::nullopt;
    c.left_side[v] = side[v] == 0 ? 1 : 0;
  }
  return c;
}

// All simple 4-cycles of the dual graph, both traversal directions. Each
// geometric circle therefore appears twice, with sides exchanged.
inline std::vector<ConwayCircle> conway_circles(const PlanarMap& m, const Faces& f) {
  std::vector<ConwayCircle> out;
  const int nf = f.count();
  std::array<int, 5> face{};
  std::array<Dart, 4> used{};
  auto edge_id = [&](Dart d) { return std::min(d, m.partner[d]); };
  // Recursive walk face[0] -> ... -> face[4] == face[0].
  auto step = [&](auto&& self, int depth) -> void {
    const int here = face[depth];
    for (const Dart d : f.darts[here]) {
      const int next = f.face_of[m.partner[d]];
      if (next == here) continue;
      bool repeat = false;
      for (int k = 0; k < depth; ++k)
        if (edge_id(used[k]) == edge_id(d)) repeat = true;
      if (repeat) continue;
      if (depth == 3) {
        if (next != face[0]) continue;
        used[3] = d;
        if (auto c = circle_from_darts(m, used)) out.push_back(std::move(*c));
        continue;
      }
      if (next < face[0]) continue;
      bool seen = false;
      for (int k = 0; k <= depth; ++k)
        if (face[k] == next) seen = true;
      if (seen) continue;
      used[depth] = d;
      face[depth + 1] = next;
      self(self, depth + 1);
    }
  };
  for (int start = 0; start < nf; ++start) {
    face[0] = start;
    step(step, 0);
  }
  return out;
}

inline std::vector<ConwayCircle> conway_circles(const PlanarMap& m) { return conway_circles(m, compute_faces(m)); }

// A flype: crossing `crossing` sits against two consecutive ends ring[i],
// ring[i+1] of the tangle `moving`; the tangle is turned over and the
// crossing carried to its opposite side.
struct FlypeSite {
  std::vector<char> moving;
  std::array<Dart, 4> ring{};  // counterclockwise around the moving tangle
  int index = 0;
  int crossing = -1;
};

// Flype sites whose moving tangle avoids boundary vertices and whose carried
// crossing is not `fixed` (pass -1 for none).
inline std::vector<FlypeSite> flype_sites(const PlanarMap& m, int fixed) {
  std::vector<FlypeSite> out;
  std::set<std::tuple<std::vector<char>, int, Dart>> seen;
  const Faces f = compute_faces(m);
  for (const ConwayCircle& c : conway_circles(m, f)) {
    // Only the left region; the reversed traversal supplies the other one.
    const std::vector<char>& mask = c.left_side;
    bool ok = side_size(mask) > 0;
    for (int v = 0; v < m.vertex_count() && ok; ++v)
      if (mask[v] && !m.is_crossing(v)) ok = false;
    if (!ok) continue;
    const std::array<Dart, 4> ring = c.left;
    for (int i = 0; i < 4; ++i) {
      const Dart a = m.partner[ring[i]];
      const Dart b = m.partner[ring[(i + 1) & 3]];
      const int t = dart_vertex(a);
      if (dart_vertex(b) != t || !m.is_crossing(t) || t == fixed) continue;
      if (dart_port(a) != ((dart_port(b) + 1) & 3)) continue;
      if (!seen.insert({mask, t, ring[i]}).second) continue;
      out.push_back({mask, ring, i, t});
    }
  }
  return out;
}

inline PlanarMap apply_flype(const PlanarMap& m, const FlypeSite& s) {
  const auto& r = s.ring;
  const int i = s.index;
  const Dart tq1 = m.partner[r[i]];
  const Dart tq = m.partner[r[(i + 1) & 3]];
  if (dart_vertex(tq) != s.crossing || dart_vertex(tq1) != s.crossing || dart_port(tq1) != ((dart_port(tq) + 1) & 3))
    throw Error("invalid flype site");
  const Dart tq2 = rotate(tq, 2);
  const Dart tq3 = rotate(tq, 3);
  const Dart r0 = r[i], r1 = r[(i + 1) & 3], r2 = r[(i + 2) & 3], r3 = r[(i + 3) & 3];
  // Outer ends of the combined tangle before the move.
  const Dart o_nw = m.partner[tq2], o_sw = m.partner[tq3], o_se = m.partner[r2], o_ne = m.partner[r3];
  auto pi = [&](Dart d) { return turned_over_dart(s.moving, d); };
  auto moved = [&](Dart x) {
    if (x == tq2) return pi(r1);
    if (x == tq3) return pi(r0);
    if (x == r2) return tq;
    if (x == r3) return tq1;
    return pi(x);
  };
  PlanarMap out = turn_over(m, s.moving);
  out.link(tq2, pi(r2));
  out.link(tq3, pi(r3));
  out.link(pi(r1), moved(o_nw));
  out.link(pi(r0), moved(o_sw));
  out.link(tq1, moved(o_ne));
  out.link(tq, moved(o_se));
  return out;
}

}  // namespace altknot
