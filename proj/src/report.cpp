#include "ookb/report.hpp"

#include "json_atoms.hpp"

namespace ookb {
namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

template <class Set>
std::vector<std::string> strings(const Set& s) {
  return {s.begin(), s.end()};
}

std::string lines(const json& j) { return j.dump() + "\n"; }

json atoms_json(const AtomSet& atoms) { return json::parse(render_atoms(atoms, Format::json)); }

std::string dist_str(const DistRelation& r) {
  return "(" + r.relation + ", " + r.domain.value_or("-") + ", " + r.range.value_or("-") + ")";
}

json dist_json(const DistRelation& r) {
  json j = {{"relation", r.relation}, {"owner", r.owner}};
  j["domain"] = r.domain ? json(*r.domain) : json(nullptr);
  j["range"] = r.range ? json(*r.range) : json(nullptr);
  return j;
}

std::string path_str(const Path& p) {
  std::string out = p.steps.front();
  for (std::size_t k = 1; k + 1 < p.steps.size(); k += 2) out += " -" + p.steps[k] + "-> " + p.steps[k + 1];
  return out;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::load: return "load";
    case ErrorCode::inconsistent: return "inconsistent";
    case ErrorCode::resource_cap: return "resource_cap";
    case ErrorCode::invariant_family: return "invariant_family";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

std::string report_stats(const StatsTable& stats, Format format) {
  if (format == Format::json) {
    json j = json::object();
    for (const auto& [label, value] : stats.rows()) j[label] = json::parse(value);
    return lines(j);
  }
  std::string out;
  for (const auto& [label, value] : stats.rows()) out += label + ": " + value + "\n";
  return out;
}

std::string report_answer_set(const AnswerSet& as, Format format) {
  if (format == Format::json) {
    json violations = json::array();
    for (const auto& v : as.violations) {
      violations.push_back({{"constraint", atom_json(v.constraint)},
                            {"kind", violation_kind_name(v.kind)},
                            {"count", v.count},
                            {"depth_sensitive", v.depth_sensitive},
                            {"witnesses", atoms_json(v.witnesses)}});
    }
    json conflicts = json::array();
    for (const auto& c : as.conflicts) conflicts.push_back({atom_json(c.first), atom_json(c.second)});
    return lines({{"consistent", as.consistent()},
                  {"has_answer_set", as.has_answer_set()},
                  {"depth", as.depth},
                  {"universe_size", as.universe_size},
                  {"atoms", atoms_json(as.atoms)},
                  {"violations", violations},
                  {"conflicts", conflicts}});
  }
  std::string out = render_atoms(as.atoms, Format::text);
  for (const auto& v : as.violations) {
    std::vector<std::string> w;
    for (const auto& a : v.witnesses) w.push_back(a.str());
    out += "% violation " + std::string(violation_kind_name(v.kind)) + " " + v.constraint.str() + " count " +
           std::to_string(v.count) + (v.depth_sensitive ? " depth-sensitive" : " hard");
    if (!w.empty()) out += " witnesses " + join(w, " ");
    out += "\n";
  }
  for (const auto& c : as.conflicts) out += "% conflict " + c.first.str() + " " + c.second.str() + "\n";
  out += std::string("% consistent: ") + (as.consistent() ? "true" : "false") + "\n";
  return out;
}

std::string report_subsumes(const std::string& c1, const std::string& c2, bool result, Format format) {
  if (format == Format::json) return lines({{"c1", c1}, {"c2", c2}, {"subsumes", result}});
  return result ? "true\n" : "false\n";
}

std::string report_description(const std::string& c, const Description& d, Format format) {
  if (format == Format::json) {
    json values = json::array();
    for (const auto& [r, x, y] : d.values) values.push_back({r, x.str(), y.str()});
    return lines({{"class", c}, {"member_of", strings(d.member_of)}, {"values", values}});
  }
  std::string out;
  for (const auto& m : d.member_of) out += "member_of " + m + "\n";
  for (const auto& [r, x, y] : d.values) out += "value " + r + " " + x.str() + " " + y.str() + "\n";
  return out;
}

std::string report_comparison(const std::string& c1, const std::string& c2, const Comparison& cmp,
                              Format format) {
  if (format == Format::json) {
    json dist_classes = json::array();
    for (const auto& [c, owner] : cmp.dist_classes) dist_classes.push_back({{"class", c}, {"owner", owner}});
    json dist_relations = json::array();
    for (const auto& r : cmp.dist_relations) dist_relations.push_back(dist_json(r));
    return lines({{"c1", c1},
                  {"c2", c2},
                  {"shared_classes", strings(cmp.shared_classes)},
                  {"dist_classes", dist_classes},
                  {"shared_relations", strings(cmp.shared_relations)},
                  {"dist_relations", dist_relations}});
  }
  std::string out = "shared_classes: " + join(strings(cmp.shared_classes), ", ") + "\n";
  for (const auto& [c, owner] : cmp.dist_classes) out += "dist_class " + owner + ": " + c + "\n";
  out += "shared_relations: " + join(strings(cmp.shared_relations), ", ") + "\n";
  for (const auto& r : cmp.dist_relations) out += "dist_relation " + r.owner + ": " + dist_str(r) + "\n";
  return out;
}

std::string report_paths(const std::vector<Path>& paths, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& p : paths) {
      std::vector<std::string> witness;
      for (const auto& t : p.witness) witness.push_back(t.str());
      arr.push_back({{"steps", p.steps}, {"witness", witness}});
    }
    return lines(arr);
  }
  std::string out;
  for (const auto& p : paths) out += path_str(p) + "\n";
  return out;
}

std::string report_program(const GroundProgram& program, Format format) {
  if (format == Format::json) {
    json rules = json::array();
    for (const auto& r : program.rules) {
      json body = json::array();
      for (const auto& b : r.body) body.push_back(atom_json(b));
      rules.push_back({{"head", atom_json(r.head)}, {"body", body}, {"origin", r.origin}});
    }
    return lines({{"facts", atoms_json(program.facts)}, {"rules", rules}});
  }
  return render_program(program);
}

std::string report_parse_errors(const std::vector<ParseError>& errors, Format format) {
  std::string out;
  for (const auto& e : errors) {
    if (format == Format::json) {
      out += lines({{"error", "load"},
                    {"kind", parse_error_kind_name(e.kind)},
                    {"file", e.span.file},
                    {"line", e.span.line},
                    {"column", e.span.column},
                    {"message", e.message}});
    } else {
      out += e.str() + "\n";
    }
  }
  return out;
}

std::string report_error(ErrorCode code, std::string_view message, Format format) {
  if (format == Format::json) return lines({{"error", error_code_name(code)}, {"message", message}});
  return "error: " + std::string(error_code_name(code)) + ": " + std::string(message) + "\n";
}

}  // namespace ookb
