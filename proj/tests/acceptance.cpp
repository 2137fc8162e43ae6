// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "nilseries/rootsystems.hpp"
#include "nilseries/seriesdb.hpp"
#include "nilseries/verify.hpp"

using namespace nilseries;
using verify::CheckResult;
using verify::Status;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> detail;
};

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }
bool contains(const std::string& s, const std::string& p) { return s.find(p) != std::string::npos; }

// Every result matching `select` must pass; recorded ones are allowed
// only when `allow_recorded` says so.
void require(Outcome& o, const std::vector<CheckResult>& rs, const std::function<bool(const CheckResult&)>& select,
             const std::function<bool(const CheckResult&)>& allow_recorded = nullptr) {
  for (const auto& r : rs) {
    if (!select(r)) continue;
    bool good = r.status == Status::Pass || (r.status == Status::Recorded && allow_recorded && allow_recorded(r));
    if (!good) {
      o.ok = false;
      o.detail.push_back(verify::status_name(r.status) + ": " + r.suite + " " + r.subject + " | " + r.lhs + " vs " + r.rhs);
    }
  }
}

void expect_count(Outcome& o, const std::vector<CheckResult>& rs, const std::function<bool(const CheckResult&)>& select,
                  long want, const std::string& what) {
  long n = std::count_if(rs.begin(), rs.end(), select);
  if (n != want) {
    o.ok = false;
    o.detail.push_back(what + ": " + std::to_string(n) + " results, expected " + std::to_string(want));
  }
}

void time_limit(Outcome& o, long ms, long limit) {
  if (ms > limit) {
    o.ok = false;
    o.detail.push_back("took " + std::to_string(ms) + " ms, limit " + std::to_string(limit) + " ms");
  }
}

auto any = [](const CheckResult&) { return true; };

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

int main() {
  const auto& reg = seriesdb::Registry::builtin();
  struct Line {
    int id;
    std::string title;
    Outcome outcome;
    long ms;
  };
  std::vector<Line> lines;
  auto criterion = [&](int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail.push_back(std::string("exception: ") + e.what());
    }
    lines.push_back({id, title, o, elapsed_ms(t0)});
  };

  criterion(1, "root-system counts", [&](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto rs = verify::check_roots();
    const std::vector<std::pair<std::string, long>> want{{"F4", 24}, {"E6", 36}, {"E7", 63},  {"E8", 120},
                                                         {"sp6", 9}, {"sl6", 15}, {"so12", 30}};
    for (const auto& [t, n] : want) {
      long got = rootsystems::root_system(rootsystems::parse_algebra(t)).N;
      if (got != n) {
        o.ok = false;
        o.detail.push_back(t + ": " + std::to_string(got));
      }
    }
    require(o, rs, any);
    time_limit(o, elapsed_ms(t0), 1000);
  });

  criterion(2, "worked example diagrams for g.g3.gQ2", [&](Outcome& o) {
    const auto& rec = reg.lookup(seriesdb::Row::F4, "g.g3.gQ2");
    const std::vector<std::pair<std::string, std::string>> want{
        {"F4", "1,0,1,2"}, {"E6", "2,1,0,1,2/1"}, {"E7", "1,0,1,0,2,0/0"}, {"E8", "2,0,0,0,1,0,1/0"}};
    for (const auto& [t, s] : want) {
      auto wd = rootsystems::series_weight_to_diagram(rec.exponents, rootsystems::parse_algebra(t), reg.weights());
      std::string got = rootsystems::diagram_string(wd);
      if (got != s) {
        o.ok = false;
        o.detail.push_back(t + ": " + got + ", expected " + s);
      }
    }
  });

  criterion(3, "dimension suite", [&](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> rs;
    for (auto r : seriesdb::all_rows()) {
      auto part = verify::check_dims(reg, r);
      rs.insert(rs.end(), part.begin(), part.end());
    }
    auto f4_diagram = [](const CheckResult& r) { return starts_with(r.subject, "f4 ") && contains(r.subject, " diagram"); };
    auto so8 = [](const CheckResult& r) { return starts_with(r.subject, "f4 ") && contains(r.subject, " so_8 partition"); };
    auto fold = [](const CheckResult& r) { return starts_with(r.subject, "f4 ") && contains(r.subject, " G2 fold"); };
    expect_count(o, rs, f4_diagram, 15 * 4, "f4-row diagram dims");
    expect_count(o, rs, fold, 4, "folding series");
    long five = 0;
    for (const auto* rec : reg.row_records(seriesdb::Row::F4)) five += rec->has_a(0);
    expect_count(o, rs, so8, five, "so8 intercepts");
    // label cross-checks are recorded by design; everything else must pass
    require(o, rs, any, [](const CheckResult& r) { return contains(r.subject, " label "); });
    time_limit(o, elapsed_ms(t0), 5000);
  });

  criterion(4, "radical identity", [&](Outcome& o) { require(o, verify::check_radical(reg), any); });

  criterion(5, "grading linearity and quoted grading claims", [&](Outcome& o) {
    require(o, verify::check_grading(reg), any);
  });

  criterion(6, "point counts", [&](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto rs = verify::check_pointcounts(reg, {1, 2, 4, 8});
    // a = 1 identities and corrected variants are recorded by policy; degrees are asserted
    require(o, rs, any, [](const CheckResult& r) {
      return !contains(r.subject, " degree") || contains(r.subject, "corrected");
    });
    time_limit(o, elapsed_ms(t0), 30000);
  });

  criterion(7, "character degrees", [&](Outcome& o) {
    auto rs = verify::check_characters(reg, {1, 2, 4, 8});
    require(o, rs, any, [](const CheckResult& r) {
      // exploratory: a = 1 f4-row checks, corrected variants, named degrees, pair sums
      bool a1_f4 = starts_with(r.subject, "f4 ") && contains(r.subject, " a=1 ");
      return a1_f4 || contains(r.subject, "corrected") || contains(r.subject, " named ") || contains(r.subject, " over ") ||
             (contains(r.subject, " pair ") && !contains(r.subject, " a=1 "));
    });
    long pairs = 0;
    for (const auto* rec : reg.row_records(seriesdb::Row::E6)) pairs += rec->pair.has_value();
    expect_count(o, rs, [](const CheckResult& r) {
      return starts_with(r.subject, "e6 ") && contains(r.subject, " a=1 pair ") && !contains(r.subject, "corrected");
    }, pairs, "a=1 pair claims");
  });

  criterion(8, "classical closed form against the oracle", [&](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    auto rs = verify::check_classical(reg, 8);
    auto exhaustive = [](const CheckResult& r) {
      return starts_with(r.subject, "sl_") || starts_with(r.subject, "so_") || starts_with(r.subject, "sp_");
    };
    expect_count(o, rs, [&](const CheckResult& r) { return exhaustive(r) && starts_with(r.subject, "sl_"); }, 66,
                 "sl partitions n <= 8");
    require(o, rs, any);
    time_limit(o, elapsed_ms(t0), 60000);
  });

  criterion(9, "magic square formulas", [&](Outcome& o) {
    auto rs = verify::check_magic(10, 12);
    auto ex1 = [](const CheckResult& r) { return starts_with(r.subject, "example regular"); };
    auto case23 = [](const CheckResult& r) {
      return contains(r.subject, "extend case formula") && !starts_with(r.subject, "sl_");
    };
    require(o, rs, [&](const CheckResult& r) { return !ex1(r) && !case23(r); });
    // the quoted Example 1 and cases (2), (3) are expected to disagree
    for (const auto& r : rs)
      if ((ex1(r) || case23(r)) && r.status != Status::Recorded) {
        o.ok = false;
        o.detail.push_back("expected a recorded discrepancy: " + r.subject);
      }
    expect_count(o, rs, [](const CheckResult& r) { return starts_with(r.subject, "example (3"); }, 10,
                 "Example 2 for n = 3..12");
  });

  criterion(10, "universal orbits", [&](Outcome& o) {
    auto rs = verify::check_universal(reg);
    auto corollary = [](const CheckResult& r) { return starts_with(r.subject, "corollary"); };
    require(o, rs, [&](const CheckResult& r) { return !corollary(r); });
    expect_count(o, rs, [](const CheckResult& r) { return contains(r.subject, "minimal orbit"); }, 31,
                 "simple types of rank <= 8");
    for (const auto& r : rs)
      if (corollary(r) && (r.status != Status::Recorded || !contains(r.note, "offset"))) {
        o.ok = false;
        o.detail.push_back("corollary comparison without a recorded offset: " + r.subject);
      }
  });

  criterion(11, "deterministic verify --json", [&](Outcome& o) {
    auto dir = std::filesystem::temp_directory_path();
    auto p1 = dir / "nilseries_acceptance_1.json", p2 = dir / "nilseries_acceptance_2.json";
    for (const auto& p : {p1, p2}) {
      std::string cmd = std::string("\"") + NILSERIES_CLI + "\" verify --json \"" + p.string() + "\" > /dev/null";
      int rc = std::system(cmd.c_str());
      // 1 only signals failing checks; 2 or worse is an error
      if (rc == -1 || WEXITSTATUS(rc) > 1) {
        o.ok = false;
        o.detail.push_back("command failed: " + cmd);
      }
    }
    std::string a = slurp(p1), b = slurp(p2);
    if (a.empty() || a != b) {
      o.ok = false;
      o.detail.push_back("reports differ or are empty (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                         " bytes)");
    }
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
  });

  bool all = true;
  for (const auto& l : lines) {
    all = all && l.outcome.ok;
    std::cout << (l.outcome.ok ? "PASS" : "FAIL") << "  criterion " << l.id << ": " << l.title << " (" << l.ms
              << " ms)\n";
    for (const auto& d : l.outcome.detail) std::cout << "      " << d << "\n";
  }
  return all ? 0 : 1;
}
