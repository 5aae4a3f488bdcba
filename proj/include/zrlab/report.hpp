// Check-row reporting: deterministic CSV detail tables and JSON summaries
// shared by the verification suites and the CLI.
//
// Determinism contract: identical config + seed produces byte-identical CSV,
// independent of thread count.  Rows are preallocated per task index and
// floats are printed with a fixed "%.17g" format.
#pragma once

#include <cstdio>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace zrlab {

/// One verified inequality/identity/statistic.
///   anchor : stable id of the property being checked (unique, greppable)
///   slack  : margin by which the check holds; >= 0 means it holds
///   kind   : "hard" (exact math; failure is a bug) or "stat" (sampling-based)
struct CheckRow {
  std::string anchor;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::string kind = "hard";
  std::map<std::string, double> params;  // sorted keys => stable output
};

/// Shortest round-trippable decimal form of a double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

/// Params flattened as "k1=v1;k2=v2" (keys already sorted by std::map).
inline std::string format_params(const std::map<std::string, double>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k;
    out += '=';
    out += format_double(v);
  }
  return out;
}

inline void write_checks_csv(std::ostream& os, const std::vector<CheckRow>& rows) {
  os << "anchor,kind,lhs,rhs,slack,pass,params\n";
  for (const auto& row : rows) {
    os << row.anchor << ',' << row.kind << ',' << format_double(row.lhs) << ',' << format_double(row.rhs) << ','
       << format_double(row.slack) << ',' << (row.pass ? "1" : "0") << ',' << format_params(row.params) << '\n';
  }
}

inline std::string checks_csv_string(const std::vector<CheckRow>& rows) {
  std::ostringstream os;
  write_checks_csv(os, rows);
  return os.str();
}

/// JSON summary {suite, params, checks: [...], failures: [...]}.
/// `failures` lists anchors of failed *hard* rows only; failed stat rows are
/// flagged in their own entries but do not count as invariant failures.
inline nlohmann::json checks_summary(const std::string& suite, const nlohmann::json& params,
                                     const std::vector<CheckRow>& rows) {
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  double min_slack = 0.0;
  bool have_rows = false;
  for (const auto& row : rows) {
    checks.push_back(nlohmann::json{{"anchor", row.anchor},
                                    {"kind", row.kind},
                                    {"lhs", row.lhs},
                                    {"rhs", row.rhs},
                                    {"slack", row.slack},
                                    {"pass", row.pass},
                                    {"params", row.params}});
    if (!have_rows || row.slack < min_slack) min_slack = row.slack;
    have_rows = true;
    if (!row.pass && row.kind == "hard") failures.push_back(row.anchor);
  }
  return nlohmann::json{{"suite", suite},          {"params", params},   {"checks", std::move(checks)},
                        {"count", rows.size()},    {"min_slack", min_slack},
                        {"failures", std::move(failures)}};
}

inline int count_hard_failures(const std::vector<CheckRow>& rows) {
  int c = 0;
  for (const auto& row : rows) {
    if (!row.pass && row.kind == "hard") ++c;
  }
  return c;
}

/// Runs fn(i) for i in [0, total) on up to `threads` workers.  Tasks are
/// claimed by contiguous blocks; results must be written to preallocated
/// slots indexed by i so the output order never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t total, int threads, Fn&& fn) {
  if (threads <= 1 || total <= 1) {
    for (std::size_t i = 0; i < total; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < total; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace zrlab
