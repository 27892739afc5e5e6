#pragma once

// 4-valent planar maps given by a rotation system.
//
// Every vertex has four ports numbered counterclockwise. A dart is a
// (vertex, port) pair packed into one int; `partner` pairs darts into edges.
// Crossing vertices carry the under-strand on ports 0 and 2 and the
// over-strand on ports 1 and 3. Boundary vertices stand for the outside of a
// tangle disk collapsed to a point on the sphere.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace altknot {

using Dart = int;

constexpr int dart_vertex(Dart d) { return d >> 2; }
constexpr int dart_port(Dart d) { return d & 3; }
constexpr Dart make_dart(int vertex, int port) { return (vertex << 2) | (port & 3); }
constexpr Dart rotate(Dart d, int k) { return make_dart(dart_vertex(d), dart_port(d) + k); }

enum class VertexKind : std::uint8_t { crossing, boundary };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class TopologyError : public Error {
 public:
  using Error::Error;
};

class ComponentError : public Error {
 public:
  using Error::Error;
};

struct PlanarMap {
  std::vector<Dart> partner;
  std::vector<VertexKind> kind;
  // Crossingless closed components carried alongside the map.
  int free_loops = 0;

  int vertex_count() const { return static_cast<int>(kind.size()); }
  int dart_count() const { return static_cast<int>(partner.size()); }
  int edge_count() const { return dart_count() / 2; }

  int add_vertex(VertexKind k) {
    kind.push_back(k);
    partner.insert(partner.end(), 4, -1);
    return vertex_count() - 1;
  }

  void link(Dart a, Dart b) {
    partner[a] = b;
    partner[b] = a;
  }

  bool is_crossing(int v) const { return kind[v] == VertexKind::crossing; }

  int crossing_count() const {
    return static_cast<int>(std::count(kind.begin(), kind.end(), VertexKind::crossing));
  }

  int boundary_vertex() const {
    for (int v = 0; v < vertex_count(); ++v)
      if (kind[v] == VertexKind::boundary) return v;
    return -1;
  }

  bool operator==(const PlanarMap&) const = default;
};

struct Faces {
  std::vector<int> face_of;  // face_of[d]: face at the corner between ports p-1 and p
  std::vector<std::vector<Dart>> darts;
  int count() const { return static_cast<int>(darts.size()); }
};

// Faces are the orbits of d -> rotate(partner(d), +1). The face of dart
// (v, p) lies to the right of its edge when walking away from v.
inline Faces compute_faces(const PlanarMap& m) {
  Faces f;
  f.face_of.assign(m.dart_count(), -1);
  for (Dart start = 0; start < m.dart_count(); ++start) {
    if (f.face_of[start] >= 0) continue;
    const int id = f.count();
    f.darts.emplace_back();
    Dart d = start;
    do {
      f.face_of[d] = id;
      f.darts.back().push_back(d);
      d = rotate(m.partner[d], 1);
    } while (d != start);
  }
  return f;
}

inline std::vector<int> vertex_components(const PlanarMap& m, int* count = nullptr) {
  std::vector<int> comp(m.vertex_count(), -1);
  int n = 0;
  std::vector<int> stack;
  for (int s = 0; s < m.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = n;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        const int w = dart_vertex(m.partner[make_dart(v, p)]);
        if (comp[w] < 0) {
          comp[w] = n;
          stack.push_back(w);
        }
      }
    }
    ++n;
  }
  if (count) *count = n;
  return comp;
}

inline bool is_connected(const PlanarMap& m) {
  int n = 0;
  vertex_components(m, &n);
  return n <= 1;
}

// Structural checks: every dart paired with a different dart, involution,
// and the Euler relation V - E + F = 2 per connected component.
inline void check_structure(const PlanarMap& m) {
  if (m.dart_count() != 4 * m.vertex_count()) throw TopologyError("dart table size mismatch");
  for (Dart d = 0; d < m.dart_count(); ++d) {
    const Dart e = m.partner[d];
    if (e < 0 || e >= m.dart_count()) throw TopologyError("unpaired dart");
    if (e == d) throw TopologyError("dart paired with itself");
    if (m.partner[e] != d) throw TopologyError("partner table is not an involution");
  }
  int components = 0;
  vertex_components(m, &components);
  const Faces f = compute_faces(m);
  if (m.vertex_count() - m.edge_count() + f.count() != 2 * components)
    throw TopologyError("rotation system is not planar");
}

inline bool is_planar(const PlanarMap& m) {
  try {
    check_structure(m);
    return true;
  } catch (const TopologyError&) {
    return false;
  }
}

// Next dart along the strand: entering a crossing at port p leaves at p + 2.
inline Dart strand_next(const PlanarMap& m, Dart d) {
  const Dart in = m.partner[d];
  return rotate(in, 2);
}

struct StrandCount {
  int closed = 0;  // closed components, including free loops
  int arcs = 0;    // components ending on boundary vertices
};

inline StrandCount count_strands(const PlanarMap& m) {
  StrandCount sc;
  sc.closed = m.free_loops;
  std::vector<char> seen(m.dart_count(), 0);
  // Arcs start at boundary darts.
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (m.is_crossing(dart_vertex(d)) || seen[d]) continue;
    ++sc.arcs;
    Dart cur = d;
    while (true) {
      seen[cur] = 1;
      const Dart in = m.partner[cur];
      seen[in] = 1;
      if (!m.is_crossing(dart_vertex(in))) break;
      cur = rotate(in, 2);
    }
  }
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (seen[d]) continue;
    ++sc.closed;
    Dart cur = d;
    while (!seen[cur]) {
      seen[cur] = 1;
      const Dart in = m.partner[cur];
      seen[in] = 1;
      cur = rotate(in, 2);
    }
  }
  return sc;
}

// Removes vertices flagged in `drop`. None of their darts may still be
// referenced by kept vertices. Returns the old -> new vertex index map.
inline std::vector<int> compact(PlanarMap& m, const std::vector<char>& drop) {
  std::vector<int> remap(m.vertex_count(), -1);
  int n = 0;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (!drop[v]) remap[v] = n++;
  PlanarMap out;
  out.free_loops = m.free_loops;
  out.kind.resize(n);
  out.partner.assign(4 * n, -1);
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (drop[v]) continue;
    out.kind[remap[v]] = m.kind[v];
    for (int p = 0; p < 4; ++p) {
      const Dart e = m.partner[make_dart(v, p)];
      const int w = remap[dart_vertex(e)];
      if (w < 0) throw std::logic_error("compact: kept vertex references a dropped one");
      out.partner[make_dart(remap[v], p)] = make_dart(w, dart_port(e));
    }
  }
  m = std::move(out);
  return remap;
}

// Replaces vertex v by two arcs joining ports (k, k+1) and (k+2, k+3), where
// k = `start`. Strands running through v are followed, closed-up pieces
// become free loops. Returns the old -> new vertex index map.
inline std::vector<int> smooth_vertex(PlanarMap& m, int v, int start) {
  std::array<int, 4> pair_of{};
  for (int k = 0; k < 4; ++k) {
    const int j = (k - start) & 3;
    pair_of[k] = (j == 0 || j == 2) ? ((k + 1) & 3) : ((k + 3) & 3);
  }
  std::array<Dart, 4> ext{};
  for (int p = 0; p < 4; ++p) ext[p] = m.partner[make_dart(v, p)];
  auto internal = [&](Dart e) { return dart_vertex(e) == v; };
  std::array<char, 4> used{};
  for (int k = 0; k < 4; ++k) {
    if (used[k] || internal(ext[k])) continue;
    int cur = k;
    used[cur] = 1;
    while (true) {
      const int j = pair_of[cur];
      used[j] = 1;
      if (!internal(ext[j])) {
        m.link(ext[k], ext[j]);
        break;
      }
      cur = dart_port(ext[j]);
      used[cur] = 1;
    }
  }
  for (int k = 0; k < 4; ++k) {
    if (used[k]) continue;
    // Everything left is a closed cycle through v's own loops.
    int cur = k;
    while (!used[cur]) {
      used[cur] = 1;
      const int j = pair_of[cur];
      used[j] = 1;
      cur = dart_port(ext[j]);
    }
    ++m.free_loops;
  }
  std::vector<char> drop(m.vertex_count(), 0);
  drop[v] = 1;
  for (int p = 0; p < 4; ++p) m.partner[make_dart(v, p)] = -1;
  return compact(m, drop);
}

// Turns the vertices in `mask` over (a half rotation out of the plane): the
// rotation is reversed and over/under are exchanged. Port p becomes 1 - p.
inline Dart turned_over_dart(const std::vector<char>& mask, Dart d) {
  if (!mask[dart_vertex(d)]) return d;
  return make_dart(dart_vertex(d), 1 - dart_port(d));
}

inline PlanarMap turn_over(const PlanarMap& m, const std::vector<char>& mask) {
  PlanarMap out = m;
  for (Dart d = 0; d < m.dart_count(); ++d)
    out.partner[turned_over_dart(mask, d)] = turned_over_dart(mask, m.partner[d]);
  return out;
}

// Shifts the port labels of vertex v by one. For a crossing this exchanges
// over and under while keeping the plane embedding.
inline PlanarMap switch_vertex(const PlanarMap& m, int v) {
  auto shift = [v](Dart d) { return dart_vertex(d) == v ? rotate(d, -1) : d; };
  PlanarMap out = m;
  for (Dart d = 0; d < m.dart_count(); ++d) out.partner[shift(d)] = shift(m.partner[d]);
  return out;
}

// A crossing is nugatory when one face meets it at two opposite corners.
// Returns the smoothing start k (ports (k,k+1),(k+2,k+3) joined) or -1.
inline int nugatory_smoothing(const PlanarMap& m, const Faces& f, int v) {
  // face_of[(v,p)] is the corner (p-1, p).
  for (int p = 0; p < 2; ++p) {
    if (f.face_of[make_dart(v, p)] == f.face_of[make_dart(v, p + 2)]) {
      // Corners (p-1,p) and (p+1,p+2) coincide; join across them.
      return (p + 3) & 3;
    }
  }
  return -1;
}

}  // namespace altknot
