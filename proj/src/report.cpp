#include <sstream>

#include "nilseries/verify.hpp"

namespace nilseries::verify {

Summary Report::summary() const {
  Summary s;
  for (const auto& r : results) {
    if (r.status == Status::Pass) ++s.pass;
    else if (r.status == Status::Fail) ++s.fail;
    else ++s.recorded;
  }
  return s;
}

int Report::exit_code() const { return summary().fail == 0 ? 0 : 1; }

nlohmann::json Report::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : results)
    rs.push_back({{"suite", r.suite},
                  {"subject", r.subject},
                  {"status", status_name(r.status)},
                  {"lhs", r.lhs},
                  {"rhs", r.rhs},
                  {"note", r.note}});
  Summary s = summary();
  return {{"results", rs}, {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"discrepancy-recorded", s.recorded}}}};
}

std::string Report::text() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << status_name(r.status) << "  " << r.suite << "  " << r.subject << "\n";
    out << "    lhs: " << r.lhs << "\n";
    out << "    rhs: " << r.rhs << "\n";
    if (!r.note.empty()) out << "    note: " << r.note << "\n";
  }
  Summary s = summary();
  out << "pass " << s.pass << ", fail " << s.fail << ", discrepancy-recorded " << s.recorded << "\n";
  return out.str();
}

}  // namespace nilseries::verify
