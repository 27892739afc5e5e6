#pragma once

// Local isotopies of diagrams: Reidemeister I/II/III moves, finger moves and
// kinks. Boundary vertices are never part of a move.

#include <array>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

// Deletes the vertices flagged in `gone`; strands entering a deleted vertex at
// dart d leave it at through(d). Closed pieces become free loops. Returns the
// old -> new vertex map.
inline std::vector<int> splice_out(PlanarMap& m, const std::vector<char>& gone, const std::function<Dart(Dart)>& through) {
  std::vector<char> used(m.dart_count(), 0);
  auto removed = [&](Dart d) { return gone[dart_vertex(d)] != 0; };
  std::vector<std::pair<Dart, Dart>> links;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (!removed(d) || used[d] || removed(m.partner[d])) continue;
    Dart cur = d;
    used[cur] = 1;
    while (true) {
      const Dart j = through(cur);
      used[j] = 1;
      const Dart e = m.partner[j];
      if (!removed(e)) {
        links.emplace_back(m.partner[d], e);
        break;
      }
      cur = e;
      used[cur] = 1;
    }
  }
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (!removed(d) || used[d]) continue;
    Dart cur = d;
    while (!used[cur]) {
      used[cur] = 1;
      const Dart j = through(cur);
      used[j] = 1;
      cur = m.partner[j];
    }
    ++m.free_loops;
  }
  for (auto [a, b] : links) m.link(a, b);
  for (Dart d = 0; d < m.dart_count(); ++d)
    if (removed(d)) m.partner[d] = -1;
  return compact(m, gone);
}

// Crossings whose switch makes the map alternating; -2 when it already is,
// -1 when no single switch works.
inline int dealternator(const PlanarMap& m) {
  if (is_alternating(m)) return -2;
  std::set<int> cand;
  for (Dart d = 0; d < m.dart_count() && cand.empty(); ++d) {
    if (!alternating_edge(m, d)) {
      for (int v : {dart_vertex(d), dart_vertex(m.partner[d])})
        if (m.is_crossing(v)) cand.insert(v);
    }
  }
  for (int v : cand)
    if (is_alternating(switch_vertex(m, v))) return v;
  return -1;
}

inline bool is_almost_alternating(const PlanarMap& m) { return dealternator(m) >= 0; }

// ---------------------------------------------------------------------------
// Reidemeister III

// A triangular face given by its three darts in face order.
struct Triangle {
  std::array<Dart, 3> face{};

  std::array<int, 3> vertices() const {
    return {dart_vertex(face[0]), dart_vertex(face[1]), dart_vertex(face[2])};
  }
  bool contains(int v) const {
    for (Dart d : face)
      if (dart_vertex(d) == v) return true;
    return false;
  }
};

// Triangles of three distinct crossings where one strand passes over both of
// its triangle crossings.
inline std::vector<Triangle> r3_sites(const PlanarMap& m, const Faces& f) {
  std::vector<Triangle> out;
  for (const auto& ds : f.darts) {
    if (ds.size() != 3) continue;
    const Triangle t{{ds[0], ds[1], ds[2]}};
    const auto v = t.vertices();
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) continue;
    if (!m.is_crossing(v[0]) || !m.is_crossing(v[1]) || !m.is_crossing(v[2])) continue;
    bool ok = false;
    for (int i = 0; i < 3; ++i) {
      // side i runs from port p of face[i] to port q - 1 of face[i+1]
      const int p = dart_port(t.face[i]);
      const int q = dart_port(t.face[(i + 1) % 3]) - 1;
      if ((p & 1) && (q & 1)) ok = true;
    }
    if (ok) out.push_back(t);
  }
  return out;
}

inline std::vector<Triangle> r3_sites(const PlanarMap& m) { return r3_sites(m, compute_faces(m)); }

// Each strand of the triangle keeps its crossings but meets them in the
// opposite order; vertex indices are preserved.
inline PlanarMap apply_r3(const PlanarMap& m, const Triangle& t) {
  std::array<int, 3> v{}, p{};
  for (int i = 0; i < 3; ++i) {
    v[i] = dart_vertex(t.face[i]);
    p[i] = dart_port(t.face[i]);
  }
  std::map<Dart, Dart> role;
  for (int i = 0; i < 3; ++i) {
    const int prev = (i + 2) % 3, next = (i + 1) % 3;
    role[make_dart(v[prev], p[prev] + 2)] = make_dart(v[i], p[i] + 1);
    role[make_dart(v[next], p[next] + 1)] = make_dart(v[i], p[i] + 2);
  }
  PlanarMap out = m;
  for (auto [x, nx] : role) {
    const Dart y = m.partner[x];
    const auto it = role.find(y);
    out.link(nx, it == role.end() ? y : it->second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reidemeister II

struct Bigon {
  std::array<Dart, 2> face{};
  bool contains(int v) const { return dart_vertex(face[0]) == v || dart_vertex(face[1]) == v; }
};

// Bigons of two crossings in which one strand is over at both.
inline std::vector<Bigon> r2_sites(const PlanarMap& m, const Faces& f) {
  std::vector<Bigon> out;
  for (const auto& ds : f.darts) {
    if (ds.size() != 2) continue;
    const int a = dart_vertex(ds[0]), b = dart_vertex(ds[1]);
    if (a == b || !m.is_crossing(a) || !m.is_crossing(b)) continue;
    if ((dart_port(ds[0]) & 1) == ((dart_port(ds[1]) - 1) & 1)) out.push_back({{ds[0], ds[1]}});
  }
  return out;
}

inline std::vector<Bigon> r2_sites(const PlanarMap& m) { return r2_sites(m, compute_faces(m)); }

inline PlanarMap apply_r2(const PlanarMap& m, const Bigon& b, std::vector<int>* remap = nullptr) {
  PlanarMap out = m;
  std::vector<char> gone(m.vertex_count(), 0);
  gone[dart_vertex(b.face[0])] = gone[dart_vertex(b.face[1])] = 1;
  auto r = splice_out(out, gone, [](Dart d) { return rotate(d, 2); });
  if (remap) *remap = std::move(r);
  return out;
}

// ---------------------------------------------------------------------------
// Creating crossings

// Pushes the edge of `d1` across the edge of `d2`; both darts must bound the
// same face. The pushed edge passes over when `over` is set. The two new
// crossings are appended as the last two vertices.
struct Finger {
  Dart pushed = 0;
  Dart target = 0;
  bool over = true;
};

inline PlanarMap apply_finger(const PlanarMap& m, const Finger& f) {
  PlanarMap out = m;
  const Dart b1 = m.partner[f.pushed], b2 = m.partner[f.target];
  const int u1 = out.add_vertex(VertexKind::crossing);
  const int u2 = out.add_vertex(VertexKind::crossing);
  const int s = f.over ? 0 : 3;
  auto at = [s](int u, int dir) { return make_dart(u, s + dir); };
  out.link(at(u1, 0), b2);
  out.link(at(u1, 1), at(u2, 1));
  out.link(at(u1, 2), at(u2, 0));
  out.link(at(u1, 3), f.pushed);
  out.link(at(u2, 2), f.target);
  out.link(at(u2, 3), b1);
  return out;
}

// Adds a one-crossing loop on the edge of `d`; the loop uses ports (j, j+1)
// of the new crossing, which is appended as the last vertex.
struct Kink {
  Dart edge = 0;
  int loop_port = 0;
};

inline PlanarMap apply_kink(const PlanarMap& m, const Kink& k) {
  PlanarMap out = m;
  const Dart b = m.partner[k.edge];
  const int x = out.add_vertex(VertexKind::crossing);
  const int j = k.loop_port;
  out.link(make_dart(x, j), make_dart(x, j + 1));
  out.link(make_dart(x, j + 2), k.edge);
  out.link(make_dart(x, j + 3), b);
  return out;
}

// Removes nugatory crossings other than `keep` until none are left. Returns
// false when only `keep` could still be removed. `keep` is updated.
inline bool r1_cleanup(PlanarMap& m, int& keep) {
  while (true) {
    const Faces f = compute_faces(m);
    int victim = -1, start = -1;
    bool keep_nugatory = false;
    for (int v = 0; v < m.vertex_count(); ++v) {
      if (!m.is_crossing(v)) continue;
      const int s = nugatory_smoothing(m, f, v);
      if (s < 0) continue;
      if (v == keep) {
        keep_nugatory = true;
        continue;
      }
      victim = v;
      start = s;
      break;
    }
    if (victim < 0) return !keep_nugatory;
    const std::vector<int> remap = smooth_vertex(m, victim, start);
    keep = keep >= 0 ? remap[keep] : keep;
  }
}

}  // namespace altknot
