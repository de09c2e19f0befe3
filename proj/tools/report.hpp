#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

// One executed task. `parameters` holds exactly the task-defining inputs, so
// a record round-trips to the batch-file line that would reproduce it.
struct TaskRecord {
  std::string kind;
  Json parameters = Json::object();
  std::string status = "ok";  // "ok" | "violation" | "error"
  Json result = Json::object();
  Json error;  // {"code", "message"} when status == "error"
};

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  std::vector<TaskRecord> records;
};

// Renders the report in the requested format ("json", "csv", or "text").
// Output is a pure function of the report: no timestamps, no host data, so
// identical runs emit identical bytes.
std::string emit_report(const RunReport& report, const std::string& format);

// 0 all good, 1 any violation, 2 any error record.
int report_exit_code(const RunReport& report);

TaskRecord error_record(const std::string& kind, Json parameters,
                        const std::string& code, const std::string& message);

}  // namespace cli
