#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loghh/logring.hpp"

namespace loghh {

inline constexpr long kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// One requested computation.  Fields that an op ignores are rejected by the
// parser rather than silently dropped.
struct Task {
  std::string op;  // hh hc omega derham hkr sbi adams theta_complex oracle
  long n = 3;      // homological window, key "N"
  long m_max = 4;  // cyclic window
  std::vector<long> degree_box;               // expanded inclusive range, empty = total mode
  std::string backend;                        // hh only: bar | koszul | resolution
  std::vector<std::string> regular_sequence;  // hh + koszul only
};

// A parsed problem file: the presentation plus the work list.
struct ProblemFile {
  LogRingSpec spec;
  Budget budget;
  std::vector<Task> tasks;
};

// Strict JSON reader: unknown keys, wrong shapes and images outside the
// target monoid are SchemaError; malformed JSON or polynomial text is
// ParseError with line/column.  The assembled spec is validated before
// returning (InvalidSpec lists the first violation).
ProblemFile parse_problem(const std::string& text);

// Canonical form: reparsing it yields the same structure, and serializing
// that parse reproduces the same bytes.
std::string serialize_problem(const ProblemFile& p);

// Per-task outcome.  Tables are (name, sorted degree -> value) pairs; checks
// are named verdicts.  status: ok | failed | budget | unverified.
struct TaskReport {
  std::string op;
  std::string status;
  std::string detail;  // first diagnostic when not ok
  std::vector<std::pair<std::string, std::map<long, long>>> tables;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> notes;
  long time_ms = 0;
};

struct Report {
  std::string field;
  std::string input_digest;
  long threads = 1;
  std::vector<TaskReport> tasks;
  int exit_code = 0;  // 0 ok, 1 input error, 2 budget, 3 failed check
};

// Runs every task in order against one shared spec.  with_oracle appends an
// independent dense recomputation of HH and HC that must agree with the main
// path.  threads is recorded in the report; tasks share caches and run
// sequentially.
Report run_problem(const ProblemFile& p, bool with_oracle, long threads);

// JSON text of the report: stable key order, numeric tables as ascending
// [degree, value] pairs, so reruns differ only in the time_ms fields.
std::string report_json(const Report& r);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace loghh
