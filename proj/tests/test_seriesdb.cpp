#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "nilseries/seriesdb.hpp"

using namespace nilseries;
using namespace nilseries::seriesdb;

namespace {

const Registry& reg() { return Registry::builtin(); }

std::string subject(const SeriesRecord& r, const Rational& a) {
  return row_tag(r.row) + " " + r.label + " a=" + to_string(a);
}

}  // namespace

TEST_CASE("registry contents") {
  CHECK(reg().row_records(Row::F4).size() == 15);
  CHECK(reg().row_records(Row::E6).size() == 5);
  CHECK(reg().row_records(Row::Subexceptional).size() == 10);
  CHECK(reg().row_records(Row::Severi).size() == 2);
  CHECK(reg().row_records(Row::Subseveri).size() == 1);
  CHECK(reg().row(Row::F4).member_at(4) == "E7");
  CHECK(reg().row(Row::Subexceptional).member_at(4) == "so_12");
  CHECK_THROWS(reg().row(Row::E6).member_at(1));
}

TEST_CASE("lookup by label, display and factor order") {
  const auto& x = reg().lookup(Row::F4, "g.g3.gQ2");
  CHECK(x.exponents == std::vector<int>{1, 0, 1, 2});
  CHECK(x.dim == LinExp(20, 22));
  CHECK(&reg().lookup(Row::F4, "gQ2.g3.g") == &x);
  CHECK(reg().lookup(Row::Severi, "VV*").label == "gQ");
  CHECK(reg().lookup(Row::Subseveri, "W").dim == LinExp(-2, 4));
  CHECK(reg().lookup(Row::Subexceptional, "gAP2.gQ").display == "gAP2.gQ");
  CHECK_THROWS_AS(reg().lookup(Row::F4, "g7"), UnknownSeries);
  CHECK_THROWS_AS(reg().lookup(Row::E6, "g"), UnknownSeries);
}

TEST_CASE("labels") {
  const std::vector<std::string> f4{"g", "g2", "g3", "gQ"};
  CHECK(render_label({1, 0, 1, 2}, f4) == "g.g3.gQ2");
  CHECK(render_label({2, 2, 0, 0}, f4) == "g^2.g2^2");
  CHECK(parse_label("g^2.g2^2.g3^2.gQ2", f4) == std::vector<int>{2, 2, 2, 2});
  CHECK(parse_label("gQ2.g", f4) == std::vector<int>{1, 0, 0, 2});
  const std::vector<std::string> sub{"g", "gQ", "gAP"};
  CHECK(render_label({0, 1, 2}, sub) == "gQ.gAP2");
  CHECK_THROWS(parse_label("g.h", f4));
}

TEST_CASE("reductive specs and group orders") {
  auto h = ReductiveSpec::parse("2A2+A1+T2");
  CHECK(h.str() == "A1+2A2+T2");
  CHECK(h.dim() == 8 + 8 + 3 + 2);
  CHECK(h.positive_roots() == 3 + 3 + 1);
  CHECK(ReductiveSpec::parse("0").dim() == 0);
  CHECK(ReductiveSpec::parse("A1+G2") == ReductiveSpec::parse("G2+A1"));
  CHECK(member_algebra("2sl_3").str() == "2A2");
  CHECK(member_algebra("so_12").str() == "D6");
  CHECK(member_algebra("so_8").dim() == 28);
  CHECK_FALSE(member_family("E7").has_value());
  CHECK(member_family("sp_6")->kind == partitions::Kind::SP);

  std::ifstream f(NILSERIES_ORACLE_FILE);
  auto o = nlohmann::json::parse(f)["orders"];
  for (const std::string t : {"G2", "F4", "E6", "E7", "E8"}) {
    auto p = exactpoly::reduce(group_order(ReductiveSpec::parse(t)), 1);
    for (int q : {2, 3}) CHECK(to_string(exactpoly::eval_at(p.as_laurent(), q)) == o[t][std::to_string(q)].get<std::string>());
  }
  // torus contributes (q-1) per rank
  auto gl2 = exactpoly::reduce(group_order(ReductiveSpec::parse("A1+T1")), 1);
  CHECK(exactpoly::eval_at(gl2.as_laurent(), 3) == 48);
}

TEST_CASE("classical data") {
  const auto& g = reg().lookup(Row::Subexceptional, "g");
  REQUIRE(!g.classical.empty());
  auto d = g.classical.front().orbit();
  CHECK(d.family.tag() == "sp_6");
  CHECK(d.parts.front() == partitions::Partition({2, 1, 1, 1, 1}));
}

// The identity holds from the tables alone except at the entries below,
// all of which disagree as printed.
TEST_CASE("radical identity from the tables") {
  const std::set<std::string> known{
      "f4 g^2.gQ a=0",       "e6 g^2.g3^2.gQ2 a=4", "subexc g a=2",      "subexc gQ a=2",
      "subexc gQ a=4",       "subexc g^2.gQ2 a=2",  "subexc g^2.gQ2 a=4", "subexc g^2.gQ2 a=8",
      "subexc g.gQ a=2",     "subexc g.gQ a=4",     "subexc g.gQ a=8",   "subexc g^2 a=2",
      "subexc g^2 a=4",      "subexc g^2 a=8",      "severi V a=1",      "severi V a=2",
      "severi V a=4",        "severi V a=8",        "severi gQ a=2",     "severi gQ a=8"};
  std::set<std::string> off;
  for (const auto& r : reg().records())
    for (std::size_t i = 0; i < r.a_values.size(); ++i) {
      const Rational& a = r.a_values[i];
      Rational lhs = member_algebra(reg().row(r.row).member_at(a)).dim() - r.dim.eval(a) - r.h[i].dim();
      if (lhs != r.rad.eval(a)) off.insert(subject(r, a));
    }
  CHECK(off == known);
}

TEST_CASE("hasse edges decrease in dimension") {
  REQUIRE(!reg().hasse().empty());
  for (const auto& e : reg().hasse()) {
    const auto& up = reg().lookup(Row::F4, e.upper);
    const auto& low = reg().lookup(Row::F4, e.lower);
    for (Rational a : {Rational(1), Rational(2), Rational(4), Rational(8)}) {
      CAPTURE(e.upper + " > " + e.lower);
      CHECK(up.dim.eval(a) > low.dim.eval(a));
    }
  }
}

TEST_CASE("expressions resolve") {
  for (const auto& r : reg().records()) {
    for (const auto& c : r.characters) CHECK_FALSE(c.expr.factors.empty());
    if (!r.points_text.empty()) CHECK(reg().points(r).has_value());
  }
  const auto& ggq = reg().lookup(Row::E6, "g.gQ");
  auto plain = reg().parse_expr(ggq, "@psi");
  auto fixed = reg().parse_expr(ggq, "@psi", true);
  CHECK_FALSE(plain == fixed);
  CHECK_THROWS_AS(exactpoly::reduce(plain, 4, 63), exactpoly::ZeroExponent);
  CHECK_NOTHROW(exactpoly::reduce(fixed, 4, 63));
}

TEST_CASE("json round trip") {
  auto j = reg().to_json();
  Registry back = Registry::from_json(j);
  CHECK(back == reg());
  CHECK(back.to_json() == j);
  CHECK(j["series"].size() == reg().records().size());
}

TEST_CASE("malformed data is rejected") {
  CHECK_THROWS_AS(Registry::parse("[series f4 g]\nbogus = 1\n"), DataError);
  CHECK_THROWS_AS(Registry::parse("[weights f4]\nnames = g g2 g3 gQ\n[row f4]\nmembers = 1:F4\n"
                                  "[series f4 g]\nexponents = 1 0 0 0\na = 1 2\ncarter = A1\n"),
                  DataError);
  CHECK_THROWS(ReductiveSpec::parse("X3"));
}
