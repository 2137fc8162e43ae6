#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <set>

#include "nilseries/rootsystems.hpp"
#include "nilseries/seriesdb.hpp"

using namespace nilseries;
using namespace nilseries::rootsystems;

namespace {

std::vector<AlgebraType> all_types(int max_rank) {
  std::vector<AlgebraType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r : {6, 7, 8}) out.push_back({Family::E, r});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

RootVec reflect(const RootSystem& rs, const RootVec& r, int i) {
  linalg::Vector v = to_vector(r);
  Rational p = rs.coroot_pairing(v, i);
  RootVec out = r;
  out[i] -= static_cast<int>(p.get_num().get_si());
  return out;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(positive_root_count(parse_algebra("F4")) == 24);
  CHECK(positive_root_count(parse_algebra("E6")) == 36);
  CHECK(positive_root_count(parse_algebra("E7")) == 63);
  CHECK(positive_root_count(parse_algebra("E8")) == 120);
  CHECK(positive_root_count(parse_algebra("sp6")) == 9);
  CHECK(positive_root_count(parse_algebra("sl6")) == 15);
  CHECK(positive_root_count(parse_algebra("so12")) == 30);
  CHECK(parse_algebra("so6") == AlgebraType{Family::A, 3});
  CHECK(parse_algebra("so5") == AlgebraType{Family::B, 2});
  CHECK_THROWS_AS(make_algebra(Family::E, 5), UnsupportedRank);
  CHECK_THROWS_AS(make_algebra(Family::D, 3), UnsupportedRank);
}

TEST_CASE("root systems are closed under simple reflections") {
  for (const auto& t : all_types(8)) {
    CAPTURE(t.name());
    const RootSystem& rs = root_system(t);
    CHECK(static_cast<long>(rs.positive_roots.size()) == rs.N);
    std::set<RootVec> pos(rs.positive_roots.begin(), rs.positive_roots.end());
    for (const auto& r : rs.positive_roots)
      for (int i = 0; i < rs.rank(); ++i) {
        RootVec s = reflect(rs, r, i);
        RootVec neg = s;
        for (auto& x : neg) x = -x;
        CHECK((pos.count(s) == 1 || pos.count(neg) == 1));
      }
    for (int i = 0; i < rs.rank(); ++i) CHECK(rs.coroot_pairing(rs.rho, i) == 1);
    long exps = 0;
    for (int d : rs.invariant_degrees) exps += d - 1;
    CHECK(exps == rs.N);
    CHECK(rs.inner(to_vector(rs.highest_root), to_vector(rs.highest_root)) == 2);
  }
}

TEST_CASE("gradings are symmetric and add up to dim g") {
  for (const auto& t : all_types(8)) {
    const RootSystem& rs = root_system(t);
    for (int node = 0; node < rs.rank(); ++node)
      for (int label : {1, 2}) {
        WeightedDiagram wd{t, std::vector<int>(rs.rank(), 0)};
        wd.labels[node] = label;
        auto g = grading_dims(wd);
        long total = 0;
        for (const auto& [i, d] : g) {
          total += d;
          CHECK(g[-i] == d);
        }
        CHECK(total == rs.dimension());
        auto ds = desing_dims(wd);
        CHECK(ds.base + ds.fiber == orbit_dim_from_diagram(wd));
      }
  }
}

TEST_CASE("minimal orbits have dimension 2h-2") {
  const std::map<std::string, long> hv{{"E6", 12}, {"E7", 18}, {"E8", 30}, {"F4", 9}, {"G2", 4},
                                       {"A7", 8},  {"B5", 9},  {"C4", 5},  {"D6", 10}};
  for (const auto& t : all_types(8)) {
    const RootSystem& rs = root_system(t);
    CHECK(orbit_dim_from_diagram(minimal_orbit_diagram(rs)) == 2 * dual_coxeter(rs) - 2);
    auto it = hv.find(t.name());
    if (it != hv.end()) CHECK(dual_coxeter(rs) == it->second);
  }
}

TEST_CASE("frozen gradings from an independent root enumeration") {
  std::ifstream f(NILSERIES_ORACLE_FILE);
  auto o = nlohmann::json::parse(f)["gradings"];
  const std::map<std::string, WeightedDiagram> cases{
      {"F4 g.g3.gQ2", {parse_algebra("F4"), {1, 0, 1, 2}}},
      {"E6 g.g3.gQ2", {parse_algebra("E6"), {2, 1, 1, 0, 1, 2}}},
      {"E7 g.g3.gQ2", {parse_algebra("E7"), {1, 0, 0, 1, 0, 2, 0}}},
      {"E8 g.g3.gQ2", {parse_algebra("E8"), {2, 0, 0, 0, 0, 1, 0, 1}}},
      {"F4 g", {parse_algebra("F4"), {1, 0, 0, 0}}},
      {"E8 g", {parse_algebra("E8"), {0, 0, 0, 0, 0, 0, 0, 1}}},
      {"E8 g^2.gQ", {parse_algebra("E8"), {1, 0, 0, 0, 0, 0, 0, 2}}},
  };
  for (const auto& [key, wd] : cases) {
    CAPTURE(key);
    const auto& want = o[key];
    CHECK(positive_root_count(wd.algebra) == want["N"].get<long>());
    CHECK(orbit_dim_from_diagram(wd) == want["orbit_dim"].get<long>());
    std::map<std::string, long> got;
    for (const auto& [i, d] : grading_dims(wd))
      if (i > 0 && d != 0) got[std::to_string(i)] = d;
    CHECK(got == want["positive"].get<std::map<std::string, long>>());
  }
}

TEST_CASE("diagram printing") {
  WeightedDiagram e8{parse_algebra("E8"), {2, 0, 0, 0, 0, 1, 0, 1}};
  CHECK(diagram_string(e8) == "2,0,0,0,1,0,1/0");
  CHECK(diagram_layout(e8) == "2 0 0 0 1 0 1 / branch 0");
  WeightedDiagram f4{parse_algebra("F4"), {1, 0, 1, 2}};
  CHECK(diagram_string(f4) == "1,0,1,2");
  CHECK_FALSE(f4.is_even());
  CHECK(WeightedDiagram{parse_algebra("E6"), {2, 0, 0, 0, 0, 2}}.is_even());
}

TEST_CASE("series weights give the worked example diagrams") {
  const auto& reg = seriesdb::Registry::builtin();
  const std::vector<int> ex{1, 0, 1, 2};
  CHECK(diagram_string(series_weight_to_diagram(ex, parse_algebra("F4"), reg.weights())) == "1,0,1,2");
  CHECK(diagram_string(series_weight_to_diagram(ex, parse_algebra("E6"), reg.weights())) == "2,1,0,1,2/1");
  CHECK(diagram_string(series_weight_to_diagram(ex, parse_algebra("E7"), reg.weights())) == "1,0,1,0,2,0/0");
  CHECK(diagram_string(series_weight_to_diagram(ex, parse_algebra("E8"), reg.weights())) == "2,0,0,0,1,0,1/0");
}

TEST_CASE("linear algebra helpers") {
  linalg::Matrix m{{2, 1}, {1, 1}};
  auto inv = linalg::inverse(m);
  CHECK(inv[0][0] == 1);
  CHECK(inv[0][1] == -1);
  CHECK(inv[1][1] == 2);
  CHECK(linalg::rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
  CHECK_THROWS_AS(linalg::inverse({{1, 2}, {2, 4}}), std::domain_error);
}
