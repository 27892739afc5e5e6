// altknot: classify, enumerate and inspect alternating diagrams with a
// marked unknotting crossing.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 verification failure,
// 4 cap exceeded, 5 other topological failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "altknot/altknot.hpp"

using nlohmann::json;
using namespace altknot;

namespace {

enum Exit { ok = 0, usage = 1, parse_failure = 2, verify_failure = 3, cap_failure = 4, topology_failure = 5 };

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

struct Common {
  std::string input;
  std::string format = "json";
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw Failure(parse_failure, "cannot open " + path);
  }
  std::istream& in = file.is_open() ? static_cast<std::istream&>(file) : std::cin;
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line);
  }
  if (out.empty()) throw Failure(parse_failure, "no input");
  return out;
}

MarkedDiagram parse_marked(const std::string& line, bool need_mark) {
  try {
    if (need_mark && !parse_pd_tokens(line).marked) throw ParseError("missing @ mark");
    return parse_marked_pd(line);
  } catch (const Error& e) {
    throw Failure(parse_failure, std::string("parse error: ") + e.what());
  }
}

void require_unknotting(const MarkedDiagram& d) {
  bool verified = false;
  try {
    verified = verify_unknotting_crossing(d);
  } catch (const Error& e) {
    throw Failure(topology_failure, e.what());
  }
  if (!verified) throw Failure(verify_failure, "marked crossing is not an unknotting crossing");
}

json torus_json(const TorusKnot& t) { return {{"r", t.r}, {"s", t.s}}; }

json lineage_json(const Lineage& l) {
  json moves = json::array();
  for (const MoveRecord& m : l.moves) moves.push_back({{"kind", to_string(m.kind)}, {"delta", m.delta}, {"site", m.site}});
  return {{"seed", {{"n", l.seed.n}, {"sign", l.seed.sign}}}, {"moves", moves}};
}

std::string type_name(TypeKind k) {
  std::string s = to_string(k);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

json classification_json(const MarkedDiagram& d, long long det, const GeometricType& g) {
  json params = json::object();
  if (g.kind == TypeKind::torus) {
    params = torus_json(g.torus);
    if (!g.alternatives.empty()) {
      params["alternatives"] = json::array();
      for (const TorusKnot& t : g.alternatives) params["alternatives"].push_back(torus_json(t));
    }
  }
  json out = {{"canonical", canonical_code(d)}, {"crossings", d.crossing_count()}, {"det", det},
              {"type", type_name(g.kind)}, {"params", params}};
  if (g.companion) out["companion"] = canonical_code(*g.companion);
  return out;
}

std::string classification_text(const MarkedDiagram& d, long long det, const GeometricType& g) {
  std::ostringstream os;
  os << describe(g) << " det=" << det;
  if (g.companion) os << " companion=" << canonical_code(*g.companion);
  os << " " << canonical_code(d);
  return os.str();
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.format == "text")
    std::cout << text << "\n";
  else
    std::cout << j.dump() << "\n";
}

int run_classify(const Common& c) {
  for (const std::string& line : read_lines(c.input)) {
    const MarkedDiagram d = parse_marked(line, true);
    require_unknotting(d);
    const GeometricType g = classify(d);
    const long long det = goeritz_determinant(d.diagram);
    emit(c, classification_json(d, det, g), classification_text(d, det, g));
  }
  return ok;
}

int run_det(const Common& c) {
  for (const std::string& line : read_lines(c.input)) {
    const MarkedDiagram d = parse_marked(line, false);
    const long long det = goeritz_determinant(d.diagram);
    emit(c, {{"canonical", canonical_code(d.diagram)}, {"det", det}}, std::to_string(det));
  }
  return ok;
}

int run_verify(const Common& c) {
  int code = ok;
  for (const std::string& line : read_lines(c.input)) {
    const MarkedDiagram d = parse_marked(line, true);
    Reduction r;
    try {
      if (!is_alternating(d.diagram.map)) throw TopologyError("diagram is not alternating");
      r = reduce_almost_alternating(change_crossing(d));
    } catch (const Error& e) {
      throw Failure(topology_failure, e.what());
    }
    json steps = json::array();
    for (const std::string& s : r.sites) steps.push_back(s);
    emit(c, {{"canonical", canonical_code(d)}, {"unknotting", r.unknot}, {"crossing_trace", r.crossings}, {"steps", steps}},
         r.unknot ? "true" : "false");
    if (!r.unknot) code = verify_failure;
  }
  return code;
}

int run_companion(const Common& c) {
  for (const std::string& line : read_lines(c.input)) {
    const MarkedDiagram d = parse_marked(line, true);
    require_unknotting(d);
    const GeometricType g = classify(d);
    if (!g.companion) throw Failure(topology_failure, "no substantial Conway sphere: the diagram is not a satellite");
    const MarkedDiagram& k = *g.companion;
    const GeometricType gk = classify(k);
    const long long det = goeritz_determinant(k.diagram);
    emit(c, classification_json(k, det, gk), classification_text(k, det, gk));
  }
  return ok;
}

int run_enumerate(const Common& c, const EnumerateOptions& o) {
  std::vector<FamilyMember> members;
  try {
    members = enumerate_family(o);
  } catch (const CapExceeded& e) {
    throw Failure(cap_failure, e.what());
  }
  for (const ClassifiedMember& m : classify_family(members)) {
    json j = classification_json(m.member.diagram, m.det, m.type);
    j["canonical"] = m.member.code;
    j["lineage"] = lineage_json(m.member.lineage);
    j["flype_class"] = m.member.representatives;
    emit(c, j, std::to_string(m.member.diagram.crossing_count()) + " " + classification_text(m.member.diagram, m.det, m.type));
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating diagrams with an unknotting crossing"};
  app.require_subcommand(1);
  Common common;
  EnumerateOptions eopts;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", common.input, "file with one PD code per line (default: stdin)");
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  CLI::App* classify_cmd = app.add_subcommand("classify", "classify K_D for PD codes with an @ mark");
  add_common(classify_cmd, true);
  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list the family up to a crossing bound");
  add_common(enumerate_cmd, false);
  enumerate_cmd->add_option("--max-crossings", eopts.max_crossings, "crossing bound")->required();
  enumerate_cmd->add_flag("--mirrors", eopts.mirrors, "emit both chiralities");
  enumerate_cmd->add_option("--cap", eopts.cap, "largest accepted crossing bound");
  CLI::App* det_cmd = app.add_subcommand("det", "knot determinant");
  add_common(det_cmd, true);
  CLI::App* verify_cmd = app.add_subcommand("verify", "check that the marked crossing is an unknotting crossing");
  add_common(verify_cmd, true);
  CLI::App* companion_cmd = app.add_subcommand("companion", "companion of a satellite K_D");
  add_common(companion_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    if (*classify_cmd) return run_classify(common);
    if (*enumerate_cmd) return run_enumerate(common, eopts);
    if (*det_cmd) return run_det(common);
    if (*verify_cmd) return run_verify(common);
    if (*companion_cmd) return run_companion(common);
  } catch (const Failure& f) {
    std::cout.flush();
    std::cerr << "altknot: " << f.what() << "\n";
    return f.code;
  } catch (const Error& e) {
    std::cout.flush();
    std::cerr << "altknot: " << e.what() << "\n";
    return topology_failure;
  }
  return usage;
}
