#pragma once

// Breadth-first generation of the family of marked diagrams reachable from
// clasp diagrams by tongue and twirl moves and flypes, with lineages.

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "altknot/canonical.hpp"
#include "altknot/goeritz.hpp"
#include "altknot/moves.hpp"
#include "altknot/recognition.hpp"

namespace altknot {

class CapExceeded : public Error {
 public:
  using Error::Error;
};

struct Seed {
  int n = 1;
  int sign = 1;
  bool operator==(const Seed&) const = default;
};

// One move with enough data to replay it on the concrete diagram.
struct MoveStep {
  MoveKind kind = MoveKind::flype;
  FlypeSite flype;
  TongueSite tongue;
  int variant = 0;
};

struct Lineage {
  Seed seed;
  std::vector<MoveStep> steps;
  std::vector<MoveRecord> moves;  // one per step
};

inline MarkedDiagram apply_step(const MarkedDiagram& d, const MoveStep& s) {
  switch (s.kind) {
    case MoveKind::flype: return apply_flype(d, s.flype);
    case MoveKind::tongue: return apply_tongue(d, s.tongue);
    case MoveKind::twirl: return apply_twirl(d, s.variant);
  }
  throw Error("unknown move");
}

inline MarkedDiagram replay(const Lineage& l) {
  MarkedDiagram d = clasp_diagram(l.seed.n, l.seed.sign);
  for (const MoveStep& s : l.steps) d = apply_step(d, s);
  return d;
}

struct FamilyMember {
  MarkedDiagram diagram;                     // as produced by replaying the lineage
  std::string code;                          // canonical code, minimal over the flype class
  Lineage lineage;
  std::vector<std::string> representatives;  // canonical codes of the flype class, sorted
};

struct EnumerateOptions {
  int max_crossings = 8;
  bool mirrors = false;
  int cap = 14;
  std::size_t max_members = std::size_t{1} << 22;
};

namespace detail {

struct FamilyNode {
  MarkedDiagram diagram;
  Lineage lineage;
  std::string code;
  int flype_class = 0;
};

inline Lineage extend(Lineage l, const MoveStep& s, const MarkedDiagram& before, const MarkedDiagram& after) {
  MoveRecord r{s.kind, after.crossing_count() - before.crossing_count(), ""};
  switch (s.kind) {
    case MoveKind::flype: r.site = site_code(s.flype); break;
    case MoveKind::tongue: r.site = site_code(s.tongue); break;
    case MoveKind::twirl: r.site = "v" + std::to_string(s.variant); break;
  }
  l.steps.push_back(s);
  l.moves.push_back(std::move(r));
  return l;
}

class FamilyBuilder {
 public:
  explicit FamilyBuilder(const EnumerateOptions& o) : opts_(o), by_size_(o.max_crossings + 1) {}

  // Adds `d` and its flype class unless already known.
  void add(const MarkedDiagram& d, const Lineage& l) {
    if (known(d)) return;
    const int cls = static_cast<int>(classes_.size());
    classes_.emplace_back();
    const FlypeOrbit orbit = flype_orbit(d.diagram.map, d.marked);
    for (std::size_t i = 0; i < orbit.maps.size(); ++i) {
      MarkedDiagram x{Diagram{orbit.maps[i]}, d.marked, Verification::unverified};
      std::string key = key_string(canonical_key(x));
      if (index_.count(key)) continue;
      Lineage li = l;
      MarkedDiagram cur = d;
      for (const FlypeSite& s : orbit.path_to(static_cast<int>(i))) {
        MoveStep st{MoveKind::flype, s, {}, 0};
        MarkedDiagram next = apply_flype(cur, s);
        li = extend(std::move(li), st, cur, next);
        cur = std::move(next);
      }
      const int id = static_cast<int>(nodes_.size());
      index_.emplace(std::move(key), id);
      nodes_.push_back({std::move(x), std::move(li), canonical_code(cur), cls});
      classes_[cls].push_back(id);
      by_size_[nodes_.back().diagram.crossing_count()].push_back(id);
      if (nodes_.size() > opts_.max_members) throw CapExceeded("enumeration exceeded the member limit");
    }
  }

  bool known(const MarkedDiagram& d) const { return index_.count(key_string(canonical_key(d))) > 0; }

  void expand(int id) {
    const FamilyNode node = nodes_[id];
    const MarkedDiagram& d = node.diagram;
    const PlanarMap w = switch_vertex(d.diagram.map, d.marked);
    for (const TongueResult& r : tongue_candidates(w, d.marked, opts_.max_crossings)) {
      const MarkedDiagram next = marked_from_almost_alternating(r.map, r.dealternator);
      if (known(next)) continue;
      add(next, extend(node.lineage, {MoveKind::tongue, {}, r.site, 0}, d, next));
    }
    if (d.crossing_count() + 3 > opts_.max_crossings) return;
    for (int v = 0; v < twirl_variant_count; ++v) {
      const MarkedDiagram next = apply_twirl(d, v);
      if (known(next)) continue;
      add(next, extend(node.lineage, {MoveKind::twirl, {}, {}, v}, d, next));
    }
  }

  void run() {
    for (int n = 1; n + 2 <= opts_.max_crossings; ++n)
      for (int sign : {1, -1}) add(clasp_diagram(n, sign), Lineage{{n, sign}, {}, {}});
    for (int size = 0; size <= opts_.max_crossings; ++size)
      for (std::size_t i = 0; i < by_size_[size].size(); ++i) expand(by_size_[size][i]);
  }

  std::vector<FamilyMember> members() const {
    std::vector<FamilyMember> out;
    for (const auto& cls : classes_) {
      FamilyMember m;
      int best = cls.front();
      for (int id : cls) {
        m.representatives.push_back(nodes_[id].code);
        if (nodes_[id].code < nodes_[best].code) best = id;
      }
      std::sort(m.representatives.begin(), m.representatives.end());
      if (!opts_.mirrors) {
        std::string mirror_code;
        for (int id : cls) {
          std::string c = canonical_code(mirror(nodes_[id].diagram));
          if (mirror_code.empty() || c < mirror_code) mirror_code = std::move(c);
        }
        if (mirror_code < nodes_[best].code) continue;
      }
      m.diagram = nodes_[best].diagram;
      m.code = nodes_[best].code;
      m.lineage = nodes_[best].lineage;
      out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const FamilyMember& a, const FamilyMember& b) {
      if (a.diagram.crossing_count() != b.diagram.crossing_count())
        return a.diagram.crossing_count() < b.diagram.crossing_count();
      return a.code < b.code;
    });
    return out;
  }

  // Every distinct marked diagram found, flype representatives included.
  std::vector<MarkedDiagram> all_diagrams() const {
    std::vector<MarkedDiagram> out;
    for (const FamilyNode& n : nodes_) out.push_back(n.diagram);
    return out;
  }

 private:
  EnumerateOptions opts_;
  std::unordered_map<std::string, int> index_;
  std::vector<FamilyNode> nodes_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::vector<int>> by_size_;
};

}  // namespace detail

inline void check_enumerate_options(const EnumerateOptions& o) {
  if (o.max_crossings < 3) throw Error("max crossings must be at least 3");
  if (o.max_crossings > o.cap)
    throw CapExceeded("max crossings " + std::to_string(o.max_crossings) + " exceeds the cap " + std::to_string(o.cap));
}

// One member per flype class, sorted by (crossing count, canonical code).
inline std::vector<FamilyMember> enumerate_family(const EnumerateOptions& o) {
  check_enumerate_options(o);
  detail::FamilyBuilder b(o);
  b.run();
  return b.members();
}

inline std::vector<FamilyMember> enumerate_family(int max_crossings) {
  EnumerateOptions o;
  o.max_crossings = max_crossings;
  return enumerate_family(o);
}

// Every marked diagram of the family up to canonical code, both chiralities
// and all flype representatives.
inline std::vector<MarkedDiagram> enumerate_all_diagrams(int max_crossings) {
  EnumerateOptions o;
  o.max_crossings = max_crossings;
  o.mirrors = true;
  check_enumerate_options(o);
  detail::FamilyBuilder b(o);
  b.run();
  return b.all_diagrams();
}

// ---------------------------------------------------------------------------
// Unknotting tangles

// Alternating unknotting tangles generated from the single crossing by the
// same moves applied inside the tangle; each is checked with
// is_unknotting_tangle. Sorted by (crossing count, key).
inline std::vector<Tangle> unknotting_tangle_corpus(int max_crossings) {
  std::vector<Tangle> found;
  std::unordered_set<std::string> seen;
  auto add = [&](const PlanarMap& m, int marked) {
    if (!seen.insert(state_key(m, marked)).second) return;
    flype_orbit(m, marked, [&](int i, const FlypeOrbit& o) {
      if (i > 0 && !seen.insert(state_key(o.maps[i], marked)).second) return false;
      found.push_back(tangle_from_map(o.maps[i], marked));
      return false;
    });
  };
  const Tangle x1 = single_crossing_tangle();
  add(x1.map, x1.marked);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Tangle t = found[i];
    const PlanarMap w = switch_vertex(t.map, t.marked);
    for (const TongueResult& r : tongue_candidates(w, t.marked, max_crossings)) {
      const PlanarMap next = switch_vertex(r.map, r.dealternator);
      if (is_alternating(next)) add(next, r.dealternator);
    }
    if (t.crossing_count() + 3 > max_crossings) continue;
    for (int v = 0; v < twirl_variant_count; ++v) {
      const MarkedDiagram next = insert_tangle(Diagram{t.map}, t.marked, twirl_tangle(v));
      if (is_alternating(next.diagram.map)) add(next.diagram.map, next.marked);
    }
  }
  std::vector<std::pair<std::vector<int>, Tangle>> keyed;
  for (Tangle& t : found) {
    if (!is_unknotting_tangle(t, t.marked)) throw TopologyError("generated tangle is not an unknotting tangle");
    keyed.emplace_back(tangle_key(t), std::move(t));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.crossing_count() != b.second.crossing_count())
      return a.second.crossing_count() < b.second.crossing_count();
    return a.first < b.first;
  });
  std::vector<Tangle> out;
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct ClassifiedMember {
  FamilyMember member;
  long long det = 0;
  GeometricType type;
};

inline std::vector<ClassifiedMember> classify_family(const std::vector<FamilyMember>& members) {
  std::vector<ClassifiedMember> out;
  out.reserve(members.size());
  for (const FamilyMember& m : members) out.push_back({m, goeritz_determinant(m.diagram.diagram), classify(m.diagram)});
  return out;
}

struct GenusRow {
  std::string code;
  TorusKnot torus;
  long long det = 0;
  int genus = 0;
  double half_det = 0;
  int bound = 0;  // 4g + 3
  bool ok = true;
};

inline std::vector<GenusRow> genus_bound_report(const std::vector<ClassifiedMember>& stream) {
  std::vector<GenusRow> out;
  for (const ClassifiedMember& c : stream) {
    if (c.type.kind != TypeKind::torus) continue;
    GenusRow r{c.member.code, c.type.torus, c.det, torus_genus(c.type.torus), c.det / 2.0, 0, true};
    r.bound = 4 * r.genus + 3;
    r.ok = r.half_det <= r.bound;
    out.push_back(r);
  }
  return out;
}

inline std::map<long long, int> determinant_census(const std::vector<ClassifiedMember>& stream, long long bound) {
  std::map<long long, int> out;
  for (const ClassifiedMember& c : stream)
    if (c.det < bound) ++out[c.det];
  return out;
}

}  // namespace altknot
