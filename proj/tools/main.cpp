// Command-line front end for libsumset: single computations, extremal-set
// search, and the exhaustive verification sweeps, with text/JSON/CSV reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capi_util.hpp"
#include "report.hpp"
#include "sumset.h"
#include "sweeps.hpp"

namespace cli {

namespace {

using IntList = std::vector<int64_t>;

// Comma-separated integers, no spaces; negatives allowed.
IntList parse_int_list(const std::string& text) {
  IntList out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("expected a comma-separated integer list, got '" +
                                 text + "'");
    }
    if (used != token.size())
      throw CLI::ValidationError("expected a comma-separated integer list, got '" +
                                 text + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

IntList list_param(const Json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_array())
    throw std::invalid_argument(std::string("missing list parameter '") + key +
                                "'");
  IntList out;
  for (const auto& v : params[key]) {
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string("parameter '") + key +
                                  "' must hold integers");
    out.push_back(v.get<int64_t>());
  }
  return out;
}

int64_t int_param(const Json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer())
    throw std::invalid_argument(std::string("missing integer parameter '") +
                                key + "'");
  return params[key].get<int64_t>();
}

TaskRecord capi_error(const std::string& kind, const Json& params,
                      sumset_status status) {
  return error_record(kind, params, sumset_status_name(status),
                      sumset_last_error());
}

TaskRecord run_sumset_task(const Json& params) {
  const IntList set = list_param(params, "set");
  const IntList caps = list_param(params, "caps");
  const int64_t h = int_param(params, "h");
  sumset_values* raw = nullptr;
  const auto status =
      sumset_compute(set.data(), set.size(), caps.data(), h, &raw);
  if (status != SUMSET_OK) return capi_error("sumset", params, status);
  ValuesPtr values(raw);
  TaskRecord rec;
  rec.kind = "sumset";
  rec.parameters = params;
  rec.result["values"] = to_vector(values.get());
  rec.result["cardinality"] = sumset_values_count(values.get());
  return rec;
}

TaskRecord run_bound_task(const Json& params) {
  const IntList caps = list_param(params, "caps");
  const int64_t h = int_param(params, "h");
  sumset_profile* raw = nullptr;
  const auto status = sumset_profile_compute(caps.data(), caps.size(), h, &raw);
  if (status != SUMSET_OK) return capi_error("bound", params, status);
  ProfilePtr profile(raw);
  const int64_t* v = sumset_profile_min_composition(profile.get());
  const int64_t* vp = sumset_profile_max_composition(profile.get());
  TaskRecord rec;
  rec.kind = "bound";
  rec.parameters = params;
  rec.result["bound"] = sumset_profile_bound(profile.get());
  rec.result["front_index"] = sumset_profile_front_index(profile.get());
  rec.result["front_offset"] = sumset_profile_front_offset(profile.get());
  rec.result["back_index"] = sumset_profile_back_index(profile.get());
  rec.result["back_offset"] = sumset_profile_back_offset(profile.get());
  rec.result["min_composition"] = IntList(v, v + caps.size());
  rec.result["max_composition"] = IntList(vp, vp + caps.size());
  return rec;
}

TaskRecord run_path_task(const Json& params) {
  const IntList caps = list_param(params, "caps");
  const int64_t h = int_param(params, "h");
  const bool has_from = params.contains("from");
  const bool has_to = params.contains("to");
  if (has_from != has_to)
    return error_record("path", params, "argument",
                        "--from and --to must be given together");
  IntList from, to;
  if (has_from) {
    from = list_param(params, "from");
    to = list_param(params, "to");
    if (from.size() != caps.size() || to.size() != caps.size())
      return error_record("path", params, "argument",
                          "--from/--to must have the same length as --caps");
  }
  sumset_path* raw = nullptr;
  const auto status =
      sumset_path_build(caps.data(), caps.size(), h,
                        has_from ? from.data() : nullptr,
                        has_from ? to.data() : nullptr, &raw);
  if (status != SUMSET_OK) return capi_error("path", params, status);
  PathPtr path(raw);
  Json nodes = Json::array();
  for (std::size_t i = 0; i < sumset_path_length(path.get()); ++i) {
    const int64_t* node = sumset_path_node(path.get(), i);
    nodes.push_back(IntList(node, node + caps.size()));
  }
  TaskRecord rec;
  rec.kind = "path";
  rec.parameters = params;
  rec.result["length"] = sumset_path_length(path.get());
  rec.result["nodes"] = std::move(nodes);
  return rec;
}

Json classification_json(const sumset_classification& rep) {
  Json out;
  out["actual"] = rep.cardinality;
  out["bound"] = rep.bound;
  out["equality"] = rep.equal != 0;
  out["is_ap"] = rep.is_ap != 0;
  out["verdict"] = sumset_verdict_name(rep.prediction.verdict);
  out["source"] = rep.prediction.source;
  if (rep.prediction.predicted < 0)
    out["predicted"] = nullptr;
  else
    out["predicted"] = rep.prediction.predicted != 0;
  out["consistent"] = rep.consistent != 0;
  return out;
}

TaskRecord run_classify_task(const Json& params) {
  const IntList set = list_param(params, "set");
  const IntList caps = list_param(params, "caps");
  const int64_t h = int_param(params, "h");
  sumset_classification rep;
  const auto status =
      sumset_classify(set.data(), set.size(), caps.data(), h, &rep);
  if (status != SUMSET_OK) return capi_error("classify", params, status);
  TaskRecord rec;
  rec.kind = "classify";
  rec.parameters = params;
  rec.result = classification_json(rep);
  // An inconsistent classification contradicts the characterization.
  if (!rep.consistent) rec.status = "violation";
  return rec;
}

TaskRecord run_search_task(const Json& params, unsigned jobs) {
  const IntList caps = list_param(params, "caps");
  const int64_t h = int_param(params, "h");
  const int64_t elem_max = int_param(params, "elem_max");
  sumset_sets* raw = nullptr;
  const auto status =
      sumset_search(caps.data(), caps.size(), h, elem_max, jobs, &raw);
  if (status != SUMSET_OK) return capi_error("search", params, status);
  SetsPtr sets(raw);

  TaskRecord rec;
  rec.kind = "search";
  rec.parameters = params;
  Json out_sets = Json::array();
  Json inconsistent = Json::array();
  for (std::size_t i = 0; i < sumset_sets_count(sets.get()); ++i) {
    const int64_t* a = sumset_sets_get(sets.get(), i);
    IntList elems(a, a + caps.size());
    // A set attaining the bound against the characterization's word is a
    // reportable finding; it flips the exit code.
    sumset_classification rep;
    if (sumset_classify(elems.data(), elems.size(), caps.data(), h, &rep) ==
            SUMSET_OK &&
        !rep.consistent)
      inconsistent.push_back(elems);
    out_sets.push_back(std::move(elems));
  }
  rec.result["count"] = sumset_sets_count(sets.get());
  rec.result["sets"] = std::move(out_sets);
  rec.result["inconsistent"] = inconsistent;
  if (!inconsistent.empty()) rec.status = "violation";
  return rec;
}

TaskRecord run_task(const std::string& kind, const Json& params, unsigned jobs,
                    bool fail_fast) {
  try {
    if (kind == "sumset") return run_sumset_task(params);
    if (kind == "bound") return run_bound_task(params);
    if (kind == "path") return run_path_task(params);
    if (kind == "classify") return run_classify_task(params);
    if (kind == "search") return run_search_task(params, jobs);
    if (kind == "verify-direct") {
      DirectSweepParams p;
      p.k_max = int_param(params, "k_max");
      p.cap_max = int_param(params, "cap_max");
      p.elem_max = int_param(params, "elem_max");
      p.jobs = jobs;
      p.fail_fast = fail_fast;
      return run_verify_direct(p);
    }
    if (kind == "verify-inverse") {
      InverseSweepParams p;
      p.k = int_param(params, "k");
      p.cap_max = int_param(params, "cap_max");
      p.elem_max = int_param(params, "elem_max");
      p.jobs = jobs;
      p.fail_fast = fail_fast;
      return run_verify_inverse(p);
    }
    return error_record(kind, params, "argument", "unknown task kind");
  } catch (const std::invalid_argument& e) {
    return error_record(kind, params, "argument", e.what());
  }
}

std::vector<TaskRecord> run_batch(const std::string& path, unsigned jobs,
                                  bool fail_fast) {
  std::vector<TaskRecord> records;
  std::ifstream in(path);
  if (!in) {
    records.push_back(error_record("batch", Json{{"tasks", path}}, "argument",
                                   "cannot open tasks file"));
    return records;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json task = Json::parse(line, nullptr, false);
    if (task.is_discarded() || !task.is_object() || !task.contains("kind") ||
        !task["kind"].is_string()) {
      records.push_back(error_record(
          "batch", Json{{"line", line_no}}, "argument",
          "line " + std::to_string(line_no) +
              ": expected a JSON object with a string 'kind'"));
      continue;
    }
    const std::string kind = task["kind"].get<std::string>();
    Json params = std::move(task);
    params.erase("kind");
    records.push_back(run_task(kind, params, jobs, fail_fast));
    if (fail_fast && records.back().status != "ok") break;
  }
  return records;
}

unsigned default_jobs() {
  const char* env = std::getenv("SUMSET_JOBS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<unsigned>(v) : 1;
}

}  // namespace

}  // namespace cli

int main(int argc, char** argv) {
  using cli::Json;

  CLI::App app{
      "restricted h-fold sumsets: cardinalities, extremal bounds, lattice "
      "paths, equality classification, and exhaustive verification"};
  app.set_help_flag("--help", "print usage");
  app.set_version_flag("--version", std::string(sumset_version()));
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string format = "text";
  unsigned jobs = cli::default_jobs();
  bool fail_fast = false;
  std::string tasks_file;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", jobs,
                 "worker threads for sweeps and search (default "
                 "$SUMSET_JOBS or 1)");
  app.add_flag("--fail-fast", fail_fast, "stop a sweep at the first violation");
  app.add_option("--tasks", tasks_file,
                 "run a line-delimited JSON batch file (one task per line)");

  std::string set_text, caps_text, from_text, to_text;
  int64_t h = 0, elem_max = 0, k_max = 5, cap_max = 3, k = 5;

  auto* cmd_sumset =
      app.add_subcommand("sumset", "compute h^(r)A and its cardinality");
  cmd_sumset->add_option("--set", set_text, "strictly increasing integers")
      ->required();
  cmd_sumset->add_option("--caps", caps_text, "per-element caps")->required();
  cmd_sumset->add_option("--h", h, "number of summands")->required();

  auto* cmd_bound = app.add_subcommand(
      "bound", "extremal compositions and the tight cardinality bound");
  cmd_bound->add_option("--caps", caps_text)->required();
  cmd_bound->add_option("--h", h)->required();

  auto* cmd_path = app.add_subcommand(
      "path", "unit-move path between compositions (default: minimal to "
              "maximal)");
  cmd_path->add_option("--caps", caps_text)->required();
  cmd_path->add_option("--h", h)->required();
  cmd_path->add_option("--from", from_text, "start composition");
  cmd_path->add_option("--to", to_text, "target composition");

  auto* cmd_classify = app.add_subcommand(
      "classify", "compare |h^(r)A| with the bound and the predicted "
                  "equality case");
  cmd_classify->add_option("--set", set_text)->required();
  cmd_classify->add_option("--caps", caps_text)->required();
  cmd_classify->add_option("--h", h)->required();

  auto* cmd_search = app.add_subcommand(
      "search", "list all normalized sets attaining the bound");
  cmd_search->add_option("--caps", caps_text)->required();
  cmd_search->add_option("--h", h)->required();
  cmd_search->add_option("--elem-max", elem_max, "largest allowed element")
      ->required();

  auto* cmd_direct = app.add_subcommand(
      "verify-direct", "exhaustive lower-bound and boundary-value sweep");
  cmd_direct->add_option("--k-max", k_max, "largest set size (default 5)");
  cmd_direct->add_option("--cap-max", cap_max, "largest cap (default 3)");
  cmd_direct->add_option("--elem-max", elem_max,
                         "largest element (default 10)");

  auto* cmd_inverse = app.add_subcommand(
      "verify-inverse", "exhaustive equality-characterization sweep");
  cmd_inverse->add_option("--k", k, "set size (default 5)");
  cmd_inverse->add_option("--cap-max", cap_max, "largest cap (default 2)");
  cmd_inverse->add_option("--elem-max", elem_max,
                          "largest element (default 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    std::cout << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  // The sweep options share storage; fill in per-command defaults for
  // anything the user left unset.
  if (cmd_direct->parsed() && cmd_direct->count("--elem-max") == 0)
    elem_max = 10;
  if (cmd_inverse->parsed()) {
    if (cmd_inverse->count("--cap-max") == 0) cap_max = 2;
    if (cmd_inverse->count("--elem-max") == 0) elem_max = 12;
  }

  cli::RunReport report;
  try {
    if (!tasks_file.empty()) {
      if (app.get_subcommands().size() != 0) {
        std::cerr << "error: --tasks cannot be combined with a subcommand\n";
        return 2;
      }
      report.command = "batch";
      report.parameters["tasks"] = tasks_file;
      report.records = cli::run_batch(tasks_file, jobs, fail_fast);
    } else if (app.get_subcommands().empty()) {
      std::cerr << "error: expected a subcommand or --tasks FILE\n"
                << app.help();
      return 2;
    } else {
      Json params;
      const CLI::App* sub = app.get_subcommands().front();
      const std::string name = sub->get_name();
      if (sub == cmd_sumset || sub == cmd_classify)
        params["set"] = cli::parse_int_list(set_text);
      if (sub != cmd_direct && sub != cmd_inverse)
        params["caps"] = cli::parse_int_list(caps_text);
      if (sub == cmd_path) {
        if (!from_text.empty()) params["from"] = cli::parse_int_list(from_text);
        if (!to_text.empty()) params["to"] = cli::parse_int_list(to_text);
      }
      if (sub == cmd_direct) {
        params["k_max"] = k_max;
        params["cap_max"] = cap_max;
        params["elem_max"] = elem_max;
      } else if (sub == cmd_inverse) {
        params["k"] = k;
        params["cap_max"] = cap_max;
        params["elem_max"] = elem_max;
      } else {
        params["h"] = h;
      }
      if (sub == cmd_search) params["elem_max"] = elem_max;
      report.command = name;
      report.parameters = params;
      report.records.push_back(cli::run_task(name, params, jobs, fail_fast));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << cli::emit_report(report, format);
  return cli::report_exit_code(report);
}
