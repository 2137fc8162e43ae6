#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nilseries/rootsystems.hpp"
#include "nilseries/seriesdb.hpp"

namespace nilseries::verify {

using seriesdb::Registry;
using seriesdb::Row;

enum class Status { Pass, Fail, Recorded };

// "pass", "fail", "discrepancy-recorded"
std::string status_name(Status s);

struct CheckResult {
  std::string suite;
  std::string subject;
  Status status = Status::Pass;
  std::string lhs, rhs;
  std::string note;

  bool operator==(const CheckResult&) const = default;
};

// Suite names in report order.
const std::vector<std::string>& suite_names();

struct Config {
  std::vector<std::string> suites;  // empty: all
  std::vector<Rational> a_values;   // empty: 1 2 4 8, used by pointcounts and characters
};

struct Summary {
  long pass = 0, fail = 0, recorded = 0;
};

struct Report {
  std::vector<CheckResult> results;

  Summary summary() const;
  // 0 when nothing failed, 1 otherwise.
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string text() const;
};

// g(0) for a diagram of an exceptional member, as a reductive type read off
// the zero-labelled nodes.
seriesdb::ReductiveSpec zero_part(const rootsystems::WeightedDiagram& wd);

std::vector<CheckResult> check_roots();
std::vector<CheckResult> check_dims(const Registry& reg, Row row);
std::vector<CheckResult> check_radical(const Registry& reg);
std::vector<CheckResult> check_grading(const Registry& reg);
std::vector<CheckResult> check_desing(const Registry& reg);
std::vector<CheckResult> check_pointcounts(const Registry& reg, const std::vector<Rational>& a_values);
std::vector<CheckResult> check_characters(const Registry& reg, const std::vector<Rational>& a_values);
std::vector<CheckResult> check_classical(const Registry& reg, int max_n = 8);
std::vector<CheckResult> check_magic(int max_n = 10, int example_max_n = 12);
std::vector<CheckResult> check_universal(const Registry& reg);

Report run_all(const Config& config, const Registry& reg = Registry::builtin());

}  // namespace nilseries::verify
