#include "thetavex/format.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace thetavex {

using nlohmann::json;

namespace {

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

json window_json(const SignedPermutation& w) {
  return json(std::vector<int>(w.window().begin(), w.window().end()));
}

json triple_json(const ThetaTriple& t) {
  return json{{"k", t.k}, {"p", t.p}, {"q", t.q}, {"n", t.n}};
}

json corner_json(const CornerRecord& c) {
  return json{{"k", c.k}, {"p", c.p}, {"q", c.q}, {"class", std::string(to_string(c.cls))}};
}

json boxes_json(const std::set<Box>& boxes) {
  json out = json::array();
  for (const auto& b : boxes) out.push_back({b.row, b.col});
  return out;
}

std::vector<int> int_list(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("triple JSON is missing \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_array()) throw ParseError(std::string("triple JSON field \"") + key + "\" is not a list");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) {
      throw ParseError(std::string("non-integer entry in \"") + key + "\": " + e.dump());
    }
    out.push_back(e.get<int>());
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string yes_no(const std::optional<bool>& v) {
  if (!v) return "skipped";
  return *v ? "yes" : "no";
}

}  // namespace

std::string triple_to_json(const ThetaTriple& t) { return triple_json(t).dump(); }

ThetaTriple parse_triple(std::string_view text, int n) {
  const auto first = std::find_if(text.begin(), text.end(),
                                  [](unsigned char c) { return !std::isspace(c); });
  if (first == text.end() || *first != '{') return ThetaTriple::parse(text, n);

  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed triple JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("triple JSON must be an object");
  ThetaTriple t;
  t.k = int_list(j, "k");
  t.p = int_list(j, "p");
  t.q = int_list(j, "q");
  t.n = n;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw ParseError("triple JSON field \"n\" is not an integer");
    t.n = j["n"].get<int>();
  }
  if (t.k.size() != t.p.size() || t.k.size() != t.q.size()) {
    throw InvalidTripleError({Condition::Shape, {}});
  }
  return t;
}

std::string corner_to_string(const CornerRecord& c) {
  return "(" + std::to_string(c.k) + "," + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
}

std::string report_to_json(const ClassificationReport& r, bool pretty) {
  json j;
  j["schema"] = kSchemaVersion;
  j["window"] = window_json(r.w);
  j["n"] = r.w.rank();
  j["theta_vexillary"] = r.theta_vexillary();
  j["triple"] = r.triple ? triple_json(*r.triple) : json(nullptr);
  json cs = json::array();
  for (const auto& c : r.corners.corners) cs.push_back(corner_json(c));
  j["corners"] = std::move(cs);
  if (r.pattern_witness) {
    j["pattern_witness"] = {{"pattern", window_json(r.pattern_witness->pattern)},
                            {"indices", r.pattern_witness->indices}};
  } else {
    j["pattern_witness"] = nullptr;
  }
  const auto verdict = [](const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); };
  j["verdicts"] = {{"patterns", verdict(r.by_patterns)},
                   {"corners", verdict(r.by_corners)},
                   {"triple", verdict(r.by_triple)}};
  j["consistent"] = r.consistent();
  return dump(j, pretty);
}

std::string report_to_text(const ClassificationReport& r, bool overline) {
  std::string out;
  out += "window: " + r.w.to_string(overline) + "\n";
  out += "theta-vexillary: " + std::string(r.theta_vexillary() ? "yes" : "no") + "\n";
  if (r.triple) out += "triple: " + r.triple->to_string() + "\n";
  if (r.pattern_witness) {
    out += "pattern: " + r.pattern_witness->pattern.to_string(overline) + " at positions " +
           join(r.pattern_witness->indices) + "\n";
  }
  out += "corners:";
  if (r.corners.corners.empty()) out += " none";
  out += "\n";
  for (const auto& c : r.corners.corners) {
    out += "  " + corner_to_string(c) + " " + std::string(to_string(c.cls)) + "\n";
  }
  out += "verdicts: patterns " + yes_no(r.by_patterns) + ", corners " + yes_no(r.by_corners) +
         ", triple " + yes_no(r.by_triple) + "\n";
  if (!r.consistent()) out += "warning: classifiers disagree\n";
  return out;
}

std::string diagram_to_json(const SignedPermutation& w, const CornerSet& cs, bool pretty) {
  const ExtendedDiagram d = build_extended_diagram(w);
  json j;
  j["schema"] = kSchemaVersion;
  j["window"] = window_json(w);
  j["n"] = w.rank();
  j["dots"] = boxes_json(d.dots);
  j["boxes"] = boxes_json(d.boxes);
  j["diagram_boxes"] = boxes_json(d.diagram_boxes);
  j["crosses"] = boxes_json(d.crosses);
  json corners = json::array();
  for (const auto& c : cs.corners) corners.push_back(corner_json(c));
  j["corners"] = std::move(corners);
  return dump(j, pretty);
}

std::string construction_to_json(const ThetaTriple& t, const SignedPermutation& w,
                                  const SignedPermutation& inverse, bool pretty) {
  json j;
  j["schema"] = kSchemaVersion;
  ThetaTriple shown = t;
  shown.n = w.rank();
  j["triple"] = triple_json(shown);
  j["window"] = window_json(w);
  j["inverse"] = window_json(inverse);
  return dump(j, pretty);
}

}  // namespace thetavex
