#pragma once

#include <optional>
#include <string>
#include <vector>

#include "problem.hpp"

namespace parsmash::cli {

struct Options {
  std::optional<std::string> field;
  std::optional<std::size_t> max_degree;
  /// Size limit for free modules and cochain spaces.
  std::optional<std::size_t> budget;
  CheckMode mode = CheckMode::strict;
  bool timings = false;
};

enum class Format { json, tsv };

struct Report {
  std::string task;
  json dimensions = json::object();
  std::vector<Check> checks;
  json data;
  std::vector<std::string> notes;
  std::optional<long long> micros;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_input_error = 2;

/// Task names accepted by run_task and by the "tasks" list.
const std::vector<std::string>& task_names();

/// Throws InputError, DimensionError and BudgetExceeded; axiom failures while
/// constructing objects become failed checks.
Report run_task(const std::string& task, const ProblemReader& in, const json& params, const Options& options);

/// SHA-256 over the canonical problem document and the effective options.
std::string inputs_digest(const json& doc, const Options& options);
json to_json(const Report& r);
std::string to_tsv(const std::vector<Report>& reports);
bool reports_ok(const std::vector<Report>& reports);

struct Outcome {
  int code = exit_ok;
  std::string output;
};

/// Reads the problem file, runs one task (or the document's task list for
/// "run") and renders the result. Input errors are rendered as an error
/// document with exit code 2.
Outcome execute(const std::string& command, const std::string& input_path, const Options& options, Format format);
Outcome execute_document(const std::string& command, const std::string& text, const Options& options, Format format);

/// PARSMASH_BUDGET, when set to a positive integer.
std::optional<std::size_t> budget_from_env();

}  // namespace parsmash::cli
