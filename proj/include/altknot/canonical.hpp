#pragma once

// Canonical codes for planar maps up to orientation-preserving homeomorphism
// of the sphere, optionally also up to turning the diagram over (reversing
// the rotation and exchanging over/under at every crossing, which is an
// isotopy in 3-space).

#include <deque>
#include <string>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

struct Labeling {
  std::vector<int> code;
  std::vector<int> order;  // new label -> old vertex
  std::vector<int> base;   // old vertex -> actual port of local port 0
  int orientation = 1;
};

namespace detail {

inline int local_port(int base, int actual, int orientation) {
  return orientation > 0 ? ((actual - base) & 3) : ((base - actual) & 3);
}

inline int actual_port(int base, int local, int orientation) {
  return orientation > 0 ? ((base + local) & 3) : ((base - local) & 3);
}

// Local port 0 lies on the under-strand of the (possibly turned over) map.
inline int under_bit(const PlanarMap& m, int v, int base, int orientation) {
  if (!m.is_crossing(v)) return 0;
  const bool even = (base & 1) == 0;
  return (orientation > 0) == even ? 1 : 0;
}

}  // namespace detail

// Breadth-first relabeling from `start`; `marked` (or -1) is flagged in the code.
inline Labeling label_from(const PlanarMap& m, Dart start, int orientation, int marked) {
  Labeling L;
  L.orientation = orientation;
  const int n = m.vertex_count();
  std::vector<int> label(n, -1);
  L.base.assign(n, 0);
  L.order.reserve(n);
  auto visit = [&](int v, int base) {
    label[v] = static_cast<int>(L.order.size());
    L.base[v] = base;
    L.order.push_back(v);
  };
  visit(dart_vertex(start), dart_port(start));
  L.code.reserve(10 * n + 1);
  for (std::size_t i = 0; i < L.order.size(); ++i) {
    const int v = L.order[i];
    const int b = L.base[v];
    L.code.push_back((m.is_crossing(v) ? 2 : 0) + detail::under_bit(m, v, b, orientation));
    L.code.push_back(v == marked ? 1 : 0);
    for (int k = 0; k < 4; ++k) {
      const Dart e = m.partner[make_dart(v, detail::actual_port(b, k, orientation))];
      const int w = dart_vertex(e);
      if (label[w] < 0) visit(w, dart_port(e));
      L.code.push_back(label[w]);
      L.code.push_back(detail::local_port(L.base[w], dart_port(e), orientation));
    }
  }
  L.code.push_back(m.free_loops);
  // Disconnected maps are not handled by a single traversal.
  if (static_cast<int>(L.order.size()) != n) throw TopologyError("canonical labeling needs a connected map");
  return L;
}

// Rebuilds the map in label order with local ports (shifted so that under
// ports are even).
inline PlanarMap apply_labeling(const PlanarMap& m, const Labeling& L) {
  const int n = m.vertex_count();
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[L.order[i]] = i;
  std::vector<int> shift(n, 0);
  for (int v = 0; v < n; ++v)
    shift[v] = (m.is_crossing(v) && !detail::under_bit(m, v, L.base[v], L.orientation)) ? 1 : 0;
  auto new_dart = [&](Dart d) {
    const int v = dart_vertex(d);
    const int k = detail::local_port(L.base[v], dart_port(d), L.orientation);
    return make_dart(label[v], k + shift[v]);
  };
  PlanarMap out;
  out.free_loops = m.free_loops;
  out.kind.resize(n);
  out.partner.assign(4 * n, -1);
  for (int v = 0; v < n; ++v) out.kind[label[v]] = m.kind[v];
  for (Dart d = 0; d < m.dart_count(); ++d) out.partner[new_dart(d)] = new_dart(m.partner[d]);
  return out;
}

struct CanonicalOptions {
  bool allow_turnover = true;
};

// Minimum labeling over the given start darts and orientations.
inline Labeling minimal_labeling(const PlanarMap& m, const std::vector<Dart>& starts, int marked,
                                 CanonicalOptions opts = {}) {
  Labeling best;
  bool have = false;
  for (const Dart s : starts) {
    for (const int o : {1, -1}) {
      if (o < 0 && !opts.allow_turnover) continue;
      Labeling L = label_from(m, s, o, marked);
      if (!have || L.code < best.code) {
        best = std::move(L);
        have = true;
      }
    }
  }
  return best;
}

inline std::vector<Dart> vertex_darts(int v) {
  return {make_dart(v, 0), make_dart(v, 1), make_dart(v, 2), make_dart(v, 3)};
}

inline std::vector<Dart> all_crossing_darts(const PlanarMap& m) {
  std::vector<Dart> out;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.is_crossing(v))
      for (int p = 0; p < 4; ++p) out.push_back(make_dart(v, p));
  return out;
}

// Canonical representative of a marked diagram: the marked crossing becomes
// crossing 0 and the string is a PD code of the representative.
inline MarkedDiagram canonical_form(const MarkedDiagram& d) {
  const Labeling L = minimal_labeling(d.diagram.map, vertex_darts(d.marked), d.marked);
  return {Diagram{apply_labeling(d.diagram.map, L)}, 0, d.verified};
}

inline std::vector<int> canonical_key(const MarkedDiagram& d) {
  return minimal_labeling(d.diagram.map, vertex_darts(d.marked), d.marked).code;
}

inline std::string canonical_code(const MarkedDiagram& d) { return to_pd(canonical_form(d)); }

inline std::vector<int> canonical_key(const Diagram& d) {
  return minimal_labeling(d.map, all_crossing_darts(d.map), -1).code;
}

inline Diagram canonical_form(const Diagram& d) {
  const Labeling L = minimal_labeling(d.map, all_crossing_darts(d.map), -1);
  return {apply_labeling(d.map, L)};
}

inline std::string canonical_code(const Diagram& d) { return to_pd(canonical_form(d)); }

inline std::string key_string(const std::vector<int>& key) {
  std::string s;
  s.reserve(key.size() * 2);
  for (int x : key) {
    s += std::to_string(x);
    s += '.';
  }
  return s;
}

}  // namespace altknot
