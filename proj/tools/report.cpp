#include "report.hpp"

#include <sstream>

namespace cli {

namespace {

Json record_to_json(const TaskRecord& rec) {
  Json j;
  j["kind"] = rec.kind;
  j["parameters"] = rec.parameters;
  j["status"] = rec.status;
  if (rec.status == "error")
    j["error"] = rec.error;
  else
    j["result"] = rec.result;
  return j;
}

Json summary_of(const RunReport& report) {
  std::size_t ok = 0, violations = 0, errors = 0;
  for (const auto& rec : report.records) {
    if (rec.status == "ok")
      ++ok;
    else if (rec.status == "violation")
      ++violations;
    else
      ++errors;
  }
  Json s;
  s["records"] = report.records.size();
  s["ok"] = ok;
  s["violations"] = violations;
  s["errors"] = errors;
  return s;
}

std::string join_ints(const Json& arr, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].dump();
  }
  return out;
}

std::string tuple_str(const Json& arr) { return "(" + join_ints(arr, ",") + ")"; }

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string field_or(const Json& obj, const char* key,
                     const std::string& fallback = "") {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return fallback;
  return v.dump();
}

// Everything that is neither the set, the caps, nor h goes into one
// free-form args cell.
std::string extra_args(const Json& params) {
  std::string out;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (it.key() == "set" || it.key() == "caps" || it.key() == "h") continue;
    if (!out.empty()) out += " ";
    out += it.key() + "=";
    out += it.value().is_array() ? tuple_str(it.value()) : it.value().dump();
  }
  return out;
}

std::string csv_detail(const TaskRecord& rec) {
  if (rec.status == "error") return field_or(rec.error, "message");
  const Json& res = rec.result;
  if (rec.kind == "sumset")
    return "{" + join_ints(res.contains("values") ? res["values"] : Json::array(), ",") + "}";
  if (rec.kind == "bound")
    return "V=" + tuple_str(res["min_composition"]) +
           " V'=" + tuple_str(res["max_composition"]) +
           " I=" + field_or(res, "front_index") +
           " delta=" + field_or(res, "front_offset") +
           " M=" + field_or(res, "back_index") +
           " theta=" + field_or(res, "back_offset");
  if (rec.kind == "path") {
    std::string out;
    for (const auto& node : res["nodes"]) {
      if (!out.empty()) out += "->";
      out += tuple_str(node);
    }
    return out;
  }
  if (rec.kind == "search") {
    std::string out = "count=" + field_or(res, "count");
    for (const auto& s : res["sets"]) out += " " + tuple_str(s);
    return out;
  }
  if (rec.kind == "verify-direct" || rec.kind == "verify-inverse")
    return "cells=" + field_or(res, "cells") +
           " instances=" + field_or(res, "instances") +
           " violations=" + field_or(res, "violation_count");
  return "";
}

std::string emit_csv(const RunReport& report) {
  std::ostringstream out;
  out << "kind,status,set,caps,h,args,actual,bound,equality,is_ap,verdict,"
         "predicted,consistent,detail\n";
  for (const auto& rec : report.records) {
    const Json& p = rec.parameters;
    const Json& r = rec.result;
    std::string actual = field_or(r, "actual");
    if (actual.empty()) actual = field_or(r, "cardinality");
    const std::string row[] = {
        rec.kind,
        rec.status,
        p.contains("set") ? join_ints(p["set"]) : "",
        p.contains("caps") ? join_ints(p["caps"]) : "",
        field_or(p, "h"),
        extra_args(p),
        actual,
        field_or(r, "bound"),
        field_or(r, "equality"),
        field_or(r, "is_ap"),
        field_or(r, "verdict"),
        field_or(r, "predicted"),
        field_or(r, "consistent"),
        csv_detail(rec),
    };
    for (std::size_t i = 0; i < std::size(row); ++i)
      out << (i ? "," : "") << csv_quote(row[i]);
    out << "\n";
  }
  return out.str();
}

void text_for_record(std::ostringstream& out, const TaskRecord& rec) {
  const Json& p = rec.parameters;
  const Json& r = rec.result;
  out << rec.kind;
  if (p.contains("set")) out << " set=" << tuple_str(p["set"]);
  if (p.contains("caps")) out << " caps=" << tuple_str(p["caps"]);
  if (p.contains("h")) out << " h=" << field_or(p, "h");
  const std::string extras = extra_args(p);
  if (!extras.empty()) out << " " << extras;
  out << "\n";

  if (rec.status == "error") {
    out << "  error (" << field_or(rec.error, "code")
        << "): " << field_or(rec.error, "message") << "\n";
    return;
  }
  if (rec.kind == "sumset") {
    out << "  sumset: {" << join_ints(r["values"], ", ") << "}\n";
    out << "  cardinality: " << field_or(r, "cardinality") << "\n";
  } else if (rec.kind == "bound") {
    out << "  L = " << field_or(r, "bound") << "\n";
    out << "  I = " << field_or(r, "front_index")
        << "  delta = " << field_or(r, "front_offset") << "\n";
    out << "  M = " << field_or(r, "back_index")
        << "  theta = " << field_or(r, "back_offset") << "\n";
    out << "  V  = " << tuple_str(r["min_composition"]) << "\n";
    out << "  V' = " << tuple_str(r["max_composition"]) << "\n";
  } else if (rec.kind == "path") {
    out << "  length: " << field_or(r, "length") << "\n  ";
    for (std::size_t i = 0; i < r["nodes"].size(); ++i) {
      if (i) out << " -> ";
      out << tuple_str(r["nodes"][i]);
    }
    out << "\n";
  } else if (rec.kind == "classify") {
    out << "  actual = " << field_or(r, "actual")
        << "  bound = " << field_or(r, "bound")
        << "  equality = " << field_or(r, "equality") << "\n";
    out << "  is_ap = " << field_or(r, "is_ap")
        << "  verdict = " << field_or(r, "verdict")
        << "  predicted = " << field_or(r, "predicted", "none")
        << "  consistent = " << field_or(r, "consistent") << "\n";
    out << "  case: " << field_or(r, "source") << "\n";
  } else if (rec.kind == "search") {
    out << "  extremal sets: " << field_or(r, "count") << "\n";
    for (const auto& s : r["sets"]) out << "    " << tuple_str(s) << "\n";
    if (!r["inconsistent"].empty()) {
      out << "  INCONSISTENT with the characterization:\n";
      for (const auto& s : r["inconsistent"]) out << "    " << tuple_str(s) << "\n";
    }
  } else if (rec.kind == "verify-direct" || rec.kind == "verify-inverse") {
    out << "  cells: " << field_or(r, "cells")
        << "  instances: " << field_or(r, "instances")
        << "  violations: " << field_or(r, "violation_count") << "\n";
    for (const auto& v : r["violations"]) {
      out << "    VIOLATION caps=" << tuple_str(v["caps"])
          << " h=" << field_or(v, "h") << " set=" << tuple_str(v["set"])
          << ": " << field_or(v, "check") << "\n";
    }
    out << "  " << (rec.status == "ok" ? "PASS" : "FAIL") << "\n";
  }
}

std::string emit_text(const RunReport& report) {
  std::ostringstream out;
  for (const auto& rec : report.records) text_for_record(out, rec);
  const Json s = summary_of(report);
  out << "summary: records=" << s["records"] << " ok=" << s["ok"]
      << " violations=" << s["violations"] << " errors=" << s["errors"]
      << "\n";
  return out.str();
}

}  // namespace

std::string emit_report(const RunReport& report, const std::string& format) {
  if (format == "json") {
    Json j;
    j["version"] = 1;
    j["command"] = report.command;
    j["parameters"] = report.parameters;
    Json records = Json::array();
    for (const auto& rec : report.records) records.push_back(record_to_json(rec));
    j["results"] = std::move(records);
    j["summary"] = summary_of(report);
    return j.dump() + "\n";
  }
  if (format == "csv") return emit_csv(report);
  return emit_text(report);
}

int report_exit_code(const RunReport& report) {
  bool any_error = false;
  for (const auto& rec : report.records) {
    if (rec.status == "violation") return 1;
    if (rec.status == "error") any_error = true;
  }
  return any_error ? 2 : 0;
}

TaskRecord error_record(const std::string& kind, Json parameters,
                        const std::string& code, const std::string& message) {
  TaskRecord rec;
  rec.kind = kind;
  rec.parameters = std::move(parameters);
  rec.status = "error";
  rec.error = Json{{"code", code}, {"message", message}};
  return rec;
}

}  // namespace cli
