#include "lsq/report.hpp"

namespace lsq {

namespace {

json flag_json(const PropertyFlag& flag) {
  json out;
  out["value"] = flag.value;
  out["reason"] = flag_reason_name(flag.reason);
  return out;
}

bool fail(std::string* why, const std::string& message) {
  if (why) *why = message;
  return false;
}

}  // namespace

json report_envelope(const std::string& command, const LatinSquare& square,
                     const std::string& source, std::optional<uint64_t> seed) {
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["schema"] = kReportSchema;
  doc["command"] = command;
  doc["seed"] = seed ? json(*seed) : json(nullptr);
  json input;
  input["order"] = square.order();
  input["source"] = source;
  input["properties"] = to_json(loop_properties(square));
  doc["input"] = input;
  return doc;
}

json to_json(const PropertyRecord& record) {
  json out;
  out["is_quasigroup"] = record.is_quasigroup;
  out["is_loop"] = record.is_loop;
  out["is_group"] = record.is_group;
  out["is_commutative"] = record.is_commutative;
  out["is_right_bol"] = flag_json(record.is_right_bol);
  out["is_left_bol"] = flag_json(record.is_left_bol);
  out["is_moufang"] = flag_json(record.is_moufang);
  out["has_rip"] = flag_json(record.has_rip);
  out["has_lip"] = flag_json(record.has_lip);
  out["has_aaip"] = flag_json(record.has_aaip);
  return out;
}

json to_json(const Point& p) {
  return json{{"row", p.row}, {"col", p.col}, {"entry", p.entry}};
}

json to_json(const SubPermutation& perm) {
  json out;
  out["excluded_column"] = perm.excluded_column;
  out["cycles"] = perm.cycles;
  out["notation"] = perm.cycle_notation();
  return out;
}

json to_json(const CycleStructure& cycles) {
  json counts = json::array();
  for (auto [len, count] : cycles.count_by_length)
    counts.push_back(json{{"length", len}, {"count", count}});
  return json{{"counts", counts}, {"text", cycles.to_string()}};
}

json to_json(const RootOfUnity& root) {
  return json{{"num", root.num}, {"den", root.den}, {"text", root.to_string()}};
}

json to_json(const ModuleTable& table) {
  json entries = json::array();
  for (const ModuleEntry& entry : table.entries) {
    json e;
    e["dimension"] = entry.dimension;
    e["multiplicity"] = entry.multiplicity;
    switch (entry.label) {
      case module_label::primary: e["label"] = "primary"; break;
      case module_label::one_dim: e["label"] = "one-dim"; break;
      case module_label::class_iv: e["label"] = "class-(iv)"; break;
      case module_label::eigenvalue:
        e["label"] = "eigenvalue";
        e["eigenvalue"] = to_json(entry.eigenvalue);
        break;
    }
    entries.push_back(e);
  }
  json roots = json::array();
  for (const RootOfUnity& root : table.roots) roots.push_back(to_json(root));
  return json{{"order", table.order},
              {"cycle_count", table.cycle_count},
              {"roots", roots},
              {"entries", entries},
              {"balance", table.balance()}};
}

json to_json(const WedderburnSignature& signature) {
  return json{{"N", signature.six_count},
              {"summands", signature.summands()},
              {"algebra_dimension", signature.algebra_dimension()}};
}

json to_json(const FixedPointProfile& profile) {
  json structures = json::array();
  for (const auto& row : profile.structures) {
    json jrow = json::array();
    for (const auto& cs : row) jrow.push_back(cs.to_string());
    structures.push_back(jrow);
  }
  json columns = json::array();
  for (int c = 0; c < profile.order; ++c) {
    json col;
    col["column"] = c + 1;
    col["row_constant"] = static_cast<bool>(profile.column_constant[static_cast<size_t>(c)]);
    if (profile.column_constant[static_cast<size_t>(c)])
      col["cycle_structure"] = profile.structures[0][static_cast<size_t>(c)].to_string();
    columns.push_back(col);
  }
  return json{{"order", profile.order},
              {"fixed_counts", profile.fixed_counts},
              {"cell_structures", structures},
              {"columns", columns},
              {"row_constant", profile.row_constant}};
}

json to_json(const WedderburnReport& report) {
  json out;
  out["order"] = report.order;
  out["base"] = to_json(report.base);
  out["oracle_dimension"] = report.oracle_dimension;
  out["predicted_n"] = report.predicted_n ? json(*report.predicted_n) : json(nullptr);
  if (report.predicted_n) {
    WedderburnSignature signature;
    signature.six_count = *report.predicted_n;
    out["predicted_summands"] = signature.summands();
  } else {
    out["predicted_summands"] = nullptr;
  }
  out["predicted_dimension"] =
      report.predicted_dimension ? json(*report.predicted_dimension) : json(nullptr);
  out["dimension_match"] =
      report.dimension_match ? json(*report.dimension_match) : json(nullptr);
  if (report.center_dim) {
    out["center_dimension"] = *report.center_dim;
    out["predicted_center"] =
        report.predicted_center ? json(*report.predicted_center) : json(nullptr);
    out["center_match"] = report.center_match ? json(*report.center_match) : json(nullptr);
  }
  return out;
}

json to_json(const BolCertificate& certificate) {
  json out;
  out["verdict"] = certificate.certified ? "certified-right-bol" : "hypothesis-failed";
  if (!certificate.certified) {
    out["reason"] = bol_failure_name(certificate.failure);
    out["witness"] = certificate.detail;
  }
  return out;
}

json to_json(const IdentityBaseReport& report) {
  json entries = json::array();
  for (const IdentityCycleEntry& e : report.entries) {
    entries.push_back(json{{"element", e.element},
                           {"cycle_length", e.cycle_length},
                           {"rho_iterations", e.rho_iteration_count},
                           {"two_sided", e.two_sided},
                           {"pi_square_fixed", e.pi_square_fixed},
                           {"pi_value", e.pi_value}});
  }
  return json{{"identity", report.identity}, {"elements", entries}};
}

json to_json(const CorpusEntry& entry) {
  json out;
  out["name"] = entry.name;
  out["description"] = entry.description;
  out["order"] = entry.square().order();
  out["text"] = entry.text;
  if (!entry.marked_cells.empty()) {
    json cells = json::array();
    for (auto [r, c] : entry.marked_cells) cells.push_back(json{{"row", r}, {"col", c}});
    out["marked_cells"] = cells;
  }
  return out;
}

json to_json(const RipSearchResult& result) {
  return json{{"seed", result.seed},
              {"squares_examined", result.squares_examined},
              {"rip_loops_tested", result.rip_loops_tested},
              {"criterion_agreed_everywhere", result.criterion_agreed_everywhere},
              {"involution_violations", result.involution_violations}};
}

bool validate_report(const json& doc, std::string* why) {
  if (!doc.is_object()) return fail(why, "document is not an object");
  for (const char* key : {"tool", "version", "schema", "command"}) {
    if (!doc.contains(key) || !doc[key].is_string())
      return fail(why, std::string("missing string field '") + key + "'");
  }
  if (doc["schema"].get<std::string>().rfind("lsq-report/", 0) != 0)
    return fail(why, "unknown schema tag");
  if (!doc.contains("seed") || !(doc["seed"].is_null() || doc["seed"].is_number_unsigned()))
    return fail(why, "seed must be null or unsigned");
  if (doc.contains("input")) {
    const json& input = doc["input"];
    if (!input.is_object()) return fail(why, "input must be an object");
    if (!input.contains("order") || !input["order"].is_number_integer() ||
        input["order"].get<long long>() < 1)
      return fail(why, "input.order must be a positive integer");
    if (input.contains("properties")) {
      const json& props = input["properties"];
      if (!props.is_object()) return fail(why, "input.properties must be an object");
      for (const char* key : {"is_quasigroup", "is_loop", "is_group", "is_commutative"})
        if (!props.contains(key) || !props[key].is_boolean())
          return fail(why, std::string("properties.") + key + " must be boolean");
      for (const char* key :
           {"is_right_bol", "is_left_bol", "is_moufang", "has_rip", "has_lip", "has_aaip"}) {
        if (!props.contains(key) || !props[key].is_object() ||
            !props[key].contains("value") || !props[key]["value"].is_boolean() ||
            !props[key].contains("reason") || !props[key]["reason"].is_string())
          return fail(why, std::string("properties.") + key + " must carry value and reason");
      }
    }
  }
  if (doc.contains("base_points")) {
    if (!doc["base_points"].is_array()) return fail(why, "base_points must be an array");
    for (const json& bp : doc["base_points"]) {
      if (!bp.is_object() || !bp.contains("base")) return fail(why, "bad base point record");
      const json& base = bp["base"];
      for (const char* key : {"row", "col", "entry"})
        if (!base.contains(key) || !base[key].is_number_integer())
          return fail(why, "base point coordinates must be integers");
    }
  }
  if (doc.contains("profile") && !doc["profile"].is_object())
    return fail(why, "profile must be an object");
  if (doc.contains("verdicts") && !doc["verdicts"].is_object())
    return fail(why, "verdicts must be an object");
  if (doc.contains("oracle")) {
    if (!doc["oracle"].is_array()) return fail(why, "oracle must be an array");
    for (const json& entry : doc["oracle"]) {
      if (!entry.is_object() || !entry.contains("oracle_dimension") ||
          !entry["oracle_dimension"].is_number_integer())
        return fail(why, "oracle entries must carry oracle_dimension");
    }
  }
  return true;
}

}  // namespace lsq
