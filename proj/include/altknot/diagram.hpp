#pragma once

// Knot diagrams, PD-code parsing/serialization and structural validation.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "altknot/planar_map.hpp"

namespace altknot {

struct Diagram {
  PlanarMap map;

  int crossing_count() const { return map.crossing_count(); }
  bool operator==(const Diagram&) const = default;
};

enum class Verification { unverified, unknotting, not_unknotting };

struct MarkedDiagram {
  Diagram diagram;
  int marked = 0;
  Verification verified = Verification::unverified;

  int crossing_count() const { return diagram.crossing_count(); }
};

// A diagram that becomes alternating after switching `dealternator`.
struct AlmostAltDiagram {
  Diagram diagram;
  int dealternator = 0;

  int crossing_count() const { return diagram.crossing_count(); }
};

struct ValidationReport {
  bool alternating = false;
  bool reduced = false;
  int components = 0;

  bool operator==(const ValidationReport&) const = default;
};

// Crossing-to-crossing edges join an under port to an over port. An edge
// from boundary port j must reach a crossing port of the same parity as j, so
// that a tangle replacing a crossing keeps that crossing's pattern.
inline bool alternating_edge(const PlanarMap& m, Dart d) {
  const Dart e = m.partner[d];
  const bool cd = m.is_crossing(dart_vertex(d)), ce = m.is_crossing(dart_vertex(e));
  if (cd && ce) return (dart_port(d) & 1) != (dart_port(e) & 1);
  if (cd != ce) return (dart_port(d) & 1) == (dart_port(e) & 1);
  return true;
}

inline bool is_alternating(const PlanarMap& m) {
  for (Dart d = 0; d < m.dart_count(); ++d)
    if (!alternating_edge(m, d)) return false;
  return true;
}

inline bool is_reduced(const PlanarMap& m) {
  const Faces f = compute_faces(m);
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.is_crossing(v) && nugatory_smoothing(m, f, v) >= 0) return false;
  return true;
}

inline int component_count(const PlanarMap& m) {
  const StrandCount sc = count_strands(m);
  return sc.closed + sc.arcs;
}

inline ValidationReport validate(const Diagram& d) {
  return {is_alternating(d.map), is_reduced(d.map), component_count(d.map)};
}

// Removes nugatory crossings until none are left. Crossings listed in
// `tracked` are never removed and their indices are updated.
inline int remove_nugatory(PlanarMap& m, std::vector<int>* tracked = nullptr) {
  int removed = 0;
  while (true) {
    const Faces f = compute_faces(m);
    int victim = -1, start = -1;
    for (int v = 0; v < m.vertex_count() && victim < 0; ++v) {
      if (!m.is_crossing(v)) continue;
      if (tracked && std::find(tracked->begin(), tracked->end(), v) != tracked->end()) continue;
      const int s = nugatory_smoothing(m, f, v);
      if (s >= 0) {
        victim = v;
        start = s;
      }
    }
    if (victim < 0) return removed;
    const std::vector<int> remap = smooth_vertex(m, victim, start);
    if (tracked)
      for (int& t : *tracked) t = remap[t];
    ++removed;
  }
}

inline Diagram mirror(const Diagram& d) {
  Diagram out = d;
  for (int v = 0; v < d.map.vertex_count(); ++v) out.map = switch_vertex(out.map, v);
  return out;
}

inline MarkedDiagram mirror(const MarkedDiagram& d) {
  return {mirror(d.diagram), d.marked, d.verified};
}

inline Diagram change_crossing(const Diagram& d, int v) { return {switch_vertex(d.map, v)}; }

// ---------------------------------------------------------------------------
// PD codes

struct PdCode {
  std::vector<std::array<int, 4>> crossings;
  std::optional<int> marked;
};

inline PdCode parse_pd_tokens(std::string_view text) {
  PdCode pd;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto read_int = [&]() -> long {
    skip_ws();
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw ParseError("expected integer at offset " + std::to_string(i));
    const long v = std::stol(std::string(text.substr(i, j - i)));
    i = j;
    return v;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    const char c = text[i];
    if (c == 'X') {
      ++i;
      skip_ws();
      if (i >= text.size() || (text[i] != '[' && text[i] != '('))
        throw ParseError("expected '[' after X at offset " + std::to_string(i));
      const char close = text[i] == '[' ? ']' : ')';
      ++i;
      std::array<int, 4> labels{};
      for (int k = 0; k < 4; ++k) {
        const long v = read_int();
        if (v <= 0) throw ParseError("edge labels must be positive");
        labels[k] = static_cast<int>(v);
        skip_ws();
      }
      if (i >= text.size() || text[i] != close) throw ParseError("expected closing bracket at offset " + std::to_string(i));
      ++i;
      pd.crossings.push_back(labels);
    } else if (c == '@') {
      ++i;
      if (pd.marked) throw ParseError("more than one @ mark");
      pd.marked = static_cast<int>(read_int());
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at offset " + std::to_string(i));
    }
  }
  return pd;
}

// Builds the rotation system; edges are labels appearing in exactly two slots.
inline PlanarMap map_from_pd(const std::vector<std::array<int, 4>>& crossings) {
  PlanarMap m;
  std::map<int, std::vector<Dart>> slots;
  for (const auto& x : crossings) {
    const int v = m.add_vertex(VertexKind::crossing);
    for (int p = 0; p < 4; ++p) slots[x[p]].push_back(make_dart(v, p));
  }
  for (const auto& [label, ds] : slots) {
    if (ds.size() != 2)
      throw TopologyError("edge " + std::to_string(label) + " used " + std::to_string(ds.size()) + " times");
    m.link(ds[0], ds[1]);
  }
  check_structure(m);
  return m;
}

struct ParseOptions {
  bool require_reduced = true;
};

inline Diagram parse_pd(std::string_view text, ParseOptions opts = {}) {
  const PdCode pd = parse_pd_tokens(text);
  if (pd.crossings.empty()) throw ParseError("empty PD code");
  Diagram d{map_from_pd(pd.crossings)};
  if (component_count(d.map) != 1) throw ComponentError("PD code describes a link, not a knot");
  if (opts.require_reduced && !is_reduced(d.map)) throw TopologyError("diagram has a nugatory crossing");
  return d;
}

inline MarkedDiagram parse_marked_pd(std::string_view text, ParseOptions opts = {}) {
  const PdCode pd = parse_pd_tokens(text);
  MarkedDiagram md{parse_pd(text, opts), pd.marked.value_or(0), Verification::unverified};
  if (md.marked < 0 || md.marked >= md.diagram.crossing_count())
    throw ParseError("marked crossing index out of range");
  return md;
}

// Oriented PD serialization: edges are numbered along the strands and each
// crossing is written counterclockwise from its incoming under edge.
inline std::string to_pd(const PlanarMap& m) {
  std::vector<int> label(m.dart_count(), 0);
  std::vector<int> incoming_under(m.vertex_count(), -1);
  int next = 1;
  // Start each component on the lowest unlabeled under port, leaving the crossing.
  for (int v = 0; v < m.vertex_count(); ++v) {
    for (int p = 0; p < 4; ++p) {
      const Dart s = make_dart(v, p);
      if (label[s]) continue;
      Dart cur = (p & 1) ? s : rotate(s, 2);
      // Walk until the component closes.
      const Dart first = cur;
      do {
        const Dart in = m.partner[cur];
        label[cur] = label[in] = next++;
        if ((dart_port(in) & 1) == 0) incoming_under[dart_vertex(in)] = dart_port(in);
        cur = rotate(in, 2);
      } while (cur != first);
    }
  }
  std::ostringstream os;
  for (int v = 0; v < m.vertex_count(); ++v) {
    const int base = incoming_under[v];
    if (v) os << ' ';
    os << "X[";
    for (int k = 0; k < 4; ++k) os << (k ? "," : "") << label[make_dart(v, base + k)];
    os << ']';
  }
  return os.str();
}

inline std::string to_pd(const Diagram& d) { return to_pd(d.map); }

inline std::string to_pd(const MarkedDiagram& d) {
  return to_pd(d.diagram.map) + " @" + std::to_string(d.marked);
}

}  // namespace altknot
