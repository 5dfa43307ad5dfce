#pragma once

// Batch jobs: a JSON job description in, a report and an exit code out.

#include "wblow/rees.hpp"
#include "wblow/truncation.hpp"
#include "wblow/verdict.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wblow {

struct CentreSpec {
  std::string poly;
  int weight = 1;
  friend bool operator==(const CentreSpec&, const CentreSpec&) = default;
};

struct JobSpec {
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::vector<CentreSpec> centre;
  int r_min = 0;
  int r_max = 0;
  Truncation truncation;
  std::string command;
  std::string format = "json";
  // Optional keys.
  std::vector<PresentationGenerator> presentation;  // rees-verify; canonical when empty
  int aux_max = 2;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Malformed job: message plus 1-based line and column in the job text.
class JobError : public std::runtime_error {
 public:
  JobError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses and validates a job, including the ring, centre and polynomials.
/// Throws JobError.
JobSpec parse_job(std::string_view text);

const std::vector<std::string>& job_commands();

using CellValue = std::variant<bool, long, std::string, std::vector<long>, std::vector<std::string>>;

struct ReportCell {
  std::vector<std::pair<std::string, CellValue>> fields;
  // Empty arrays compare equal whatever their element type: JSON cannot tell them apart.
  friend bool operator==(const ReportCell& a, const ReportCell& b);
};

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::vector<ReportCell> cells;
  std::optional<std::string> witness;
  double timing_ms = 0;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct RunReport {
  std::string version;
  JobSpec job;
  std::vector<CheckResult> checks;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport run(const JobSpec& job);

/// 0 all PASS, 1 some FAIL, 2 INCONCLUSIVE without FAIL.
int exit_code(const std::vector<Verdict>& verdicts);
int exit_code(const RunReport& report);
constexpr int kInputErrorExit = 3;

/// Stable JSON text (two-space indent, trailing newline).
std::string report_to_json(const RunReport& report, bool with_timing = true);
RunReport report_from_json(std::string_view text);
/// Aligned plain-text table.
std::string report_to_table(const RunReport& report);

}  // namespace wblow
