#include "fqt/report.hpp"

#include <algorithm>
#include <sstream>

namespace fqt {

nlohmann::ordered_json analysis_record(const FieldCtx& F, const AnalysisReport& rep,
                                       bool class_verified) {
  nlohmann::ordered_json r;
  r["schema_version"] = "1";
  r["q"] = F.q();
  r["p"] = F.p();
  r["e"] = F.e();
  r["conductor"] = "inf*(" + rep.conductor.finite_part.to_string() + ")";
  nlohmann::ordered_json places = nlohmann::ordered_json::array();
  for (size_t i = 0; i < rep.profile.locals.size(); ++i) {
    const LocalReduction& l = rep.profile.locals[i];
    places.push_back({{"place", l.place.label()},
                      {"type", red_type_name(l.type)},
                      {"count", l.count},
                      {"lambda", l.lambda},
                      {"j_pole", rep.j_poles[i]}});
  }
  r["places"] = places;
  nlohmann::ordered_json cycle;
  for (size_t i = 0; i < rep.profile.locals.size(); ++i)
    cycle[rep.profile.locals[i].place.label()] = rep.cycle_values[i];
  r["cycle"] = cycle;
  r["pole_order"] = rep.pole_order;
  r["self_pairing"] = rep.self_pairing;
  r["deg_pi"] = rep.deg_pi;
  r["frobenius_minimal"] = rep.frobenius_minimal_input;
  r["frobenius_offset"] = rep.frobenius_offset;
  r["used_classmate"] = rep.used_classmate;
  r["class_verified"] = class_verified;
  r["strong_weil_equation"] = rep.strong_curve.to_string();
  return r;
}

namespace {

void flatten_into(const nlohmann::ordered_json& v, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten_into(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (v.is_array()) {
    for (size_t i = 0; i < v.size(); ++i)
      flatten_into(v[i], prefix + "." + std::to_string(i), out);
  } else {
    out.push_back({prefix, v.dump()});
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten_record(const nlohmann::ordered_json& rec) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(rec, "", out);
  return out;
}

std::string render_json(const nlohmann::ordered_json& rec) { return rec.dump(2) + "\n"; }

std::string render_table(const nlohmann::ordered_json& rec) {
  auto rows = flatten_record(rec);
  size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows)
    os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  return os.str();
}

std::string render_tsv(const nlohmann::ordered_json& rec) {
  auto rows = flatten_record(rec);
  std::ostringstream os;
  for (size_t i = 0; i < rows.size(); ++i) os << (i ? "\t" : "") << rows[i].first;
  os << "\n";
  for (size_t i = 0; i < rows.size(); ++i) os << (i ? "\t" : "") << rows[i].second;
  os << "\n";
  return os.str();
}

nlohmann::ordered_json graph_record(const FieldCtx& F, const ConductorShape& shape,
                                    const QuotientGraph& g) {
  nlohmann::ordered_json r;
  r["schema_version"] = "1";
  r["q"] = F.q();
  r["conductor"] = "inf*(" + shape.finite_part.to_string() + ")";
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices) vs.push_back({{"name", v.name}, {"cusps", v.cusps}});
  r["vertices"] = vs;
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (const auto& e : g.edges)
    es.push_back({{"from", g.vertices[e.from].name}, {"to", g.vertices[e.to].name}, {"name", e.name}});
  r["edges"] = es;
  r["cusps"] = g.cusp_count;
  r["betti"] = g.betti();
  return r;
}

std::string graph_dot(const QuotientGraph& g) {
  std::ostringstream os;
  os << "graph quotient {\n";
  for (const auto& v : g.vertices) {
    os << "  " << v.name << " [label=\"" << v.name;
    if (v.cusps > 0) os << " (" << v.cusps << (v.cusps == 1 ? " cusp" : " cusps") << ")";
    os << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  " << g.vertices[e.from].name << " -- " << g.vertices[e.to].name << " [label=\""
       << e.name << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace fqt
