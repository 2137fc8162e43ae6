#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilseries/partitions.hpp"

using namespace nilseries;
using namespace nilseries::partitions;

namespace {

const std::vector<int> kIdx{1, 2, 4};

bool affine(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  for (std::size_t i = 2; i < xs.size(); ++i)
    if ((ys[i] - ys[0]) * (xs[1] - xs[0]) != (ys[1] - ys[0]) * (xs[i] - xs[0])) return false;
  return true;
}

}  // namespace

TEST_CASE("partition parsing and basics") {
  CHECK(parse_partition("(2^21^4)") == Partition({2, 2, 1, 1, 1, 1}));
  CHECK(parse_partition("2211") == Partition({2, 2, 1, 1}));
  CHECK(parse_partition("(3,1,1)") == Partition({3, 1, 1}));
  CHECK(parse_partition("-").empty());
  CHECK(Partition({1, 3, 2}).str() == "(3,2,1)");
  CHECK(Partition({3, 2, 2}).transpose() == Partition({3, 3, 1}));
  CHECK(Partition({3, 2, 2}).hat() == std::vector<int>{3, 3, 1});
  CHECK(all_partitions(6).size() == 11);
  CHECK(all_partitions(8).size() == 22);
  CHECK_THROWS(Partition({2, 0}));
  CHECK(parse_pair("(21,-)").alpha == Partition({2, 1}));
  CHECK(parse_pair("(-,3)").beta == Partition({3}));
}

TEST_CASE("validity rules") {
  CHECK(is_valid(Partition({2, 2, 1}), {Kind::SO, 5}));
  CHECK_FALSE(is_valid(Partition({2, 1, 1, 1}), {Kind::SO, 5}));
  CHECK(is_valid(Partition({2, 1, 1}), {Kind::SP, 4}));
  CHECK(is_valid(Partition({3, 3, 1, 1}), {Kind::SO, 8}));
  CHECK_FALSE(is_valid(Partition({3, 1}), {Kind::SP, 4}));
  CHECK(is_very_even(Partition({4, 4}), {Kind::SO, 8}));
  CHECK_FALSE(is_very_even(Partition({4, 4}), {Kind::SP, 8}));
  CHECK_THROWS_AS(require_valid({{Kind::SO, 5}, {Partition({2, 1, 1, 1})}}), InvalidPartitionForFamily);
  CHECK_THROWS(require_valid({{Kind::SL, 5}, {Partition({2, 1})}}));
}

TEST_CASE("known orbit dimensions") {
  // regular and minimal orbits
  for (int n = 2; n <= 8; ++n) {
    Family sl{Kind::SL, n};
    CHECK(orbit_dim_classical(Partition({n}), sl) == n * n - n);
    std::vector<int> minimal(n - 2, 1);
    minimal.insert(minimal.begin(), 2);
    CHECK(orbit_dim_classical(Partition(minimal), sl) == 2 * n - 2);
  }
  for (int n = 7; n <= 12; ++n) {
    std::vector<int> minimal(n - 4, 1);
    minimal.insert(minimal.begin(), {2, 2});
    CHECK(orbit_dim_classical(Partition(minimal), {Kind::SO, n}) == 2 * n - 6);
  }
  for (int m = 4; m <= 10; m += 2) {
    std::vector<int> minimal(m - 2, 1);
    minimal.insert(minimal.begin(), 2);
    CHECK(orbit_dim_classical(Partition(minimal), {Kind::SP, m}) == m);
  }
  CHECK(orbit_dim_classical({{Kind::SLxSL, 3}, {Partition({3}), Partition({2, 1})}}) == 6 + 4);
}

TEST_CASE("closed form agrees with the centralizer oracle") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_partitions(n))
      for (Family f : {Family{Kind::SL, n}, Family{Kind::SO, n}, Family{Kind::SP, n}}) {
        if (!is_valid(p, f)) continue;
        CAPTURE(f.tag());
        CAPTURE(p.str());
        CHECK(orbit_dim_classical(p, f) == centralizer_oracle(p, f));
      }
}

TEST_CASE("pairs become partitions") {
  CHECK(pair_to_partition(parse_pair("(11,1)"), {Kind::SP, 6}) == Partition({2, 1, 1, 1, 1}));
  CHECK(pair_to_partition(parse_pair("(21,-)"), {Kind::SO, 6}) == Partition({2, 2, 1, 1}));
}

TEST_CASE("propagation is path independent") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& p : all_partitions(n)) {
      if (!is_valid(p, {Kind::SO, n})) continue;
      OrbitDatum d{{Kind::SO, n}, {p}};
      for (int a : kIdx)
        for (int b : kIdx) {
          OrbitDatum x = propagate_to(d, {1, 1}, {a, b});
          // down first, then right
          std::vector<Cell> path{{1, 1}};
          Cell c{1, 1};
          while (c.b != b) path.push_back(c = {c.a, c.b == 1 ? 2 : 4});
          while (c.a != a) path.push_back(c = {c.a == 1 ? 2 : 4, c.b});
          OrbitDatum y = propagate_path(d, path);
          CHECK(x.family == cell_family({a, b}, n));
          CHECK(orbit_dim_classical(x) == orbit_dim_classical(y));
        }
    }
  CHECK_THROWS_AS(propagate({{Kind::SO, 4}, {Partition({3, 1})}}, {1, 1}, {2, 2}), NotAdjacentCells);
}

TEST_CASE("bilinear formula matches propagated dimensions") {
  for (int n = 3; n <= 8; ++n)
    for (const auto& p : all_partitions(n)) {
      if (!is_valid(p, {Kind::SO, n})) continue;
      OrbitDatum d{{Kind::SO, n}, {p}};
      for (int b : kIdx) {
        std::vector<Rational> as, dims;
        for (int a : kIdx) {
          Rational f = magic_dim_formula(p, a, b);
          CHECK(f == orbit_dim_classical(propagate_to(d, {1, 1}, {a, b})));
          as.push_back(a);
          dims.push_back(f);
        }
        CHECK(affine(as, dims));
      }
    }
}

TEST_CASE("second worked example") {
  for (int n = 3; n <= 10; ++n) {
    std::vector<int> parts(n - 3, 1);
    parts.insert(parts.begin(), 3);
    Partition p(parts);
    for (int a : kIdx)
      for (int b : kIdx) CHECK(magic_dim_formula(p, a, b) == example2_closed_form(n, a, b));
  }
  // (3,1,...,1), n = 9, a = 2, b = 4
  CHECK(example2_closed_form(9, 2, 4) == 120);
}

TEST_CASE("first worked example disagrees at a = b = 1") {
  // regular so_5 has dimension 8; the quoted closed form gives 10 + 16
  CHECK(magic_dim_formula(regular_so_partition(5), 1, 1) == 8);
  CHECK(example1_closed_form(5, 1, 1) == 26);
}

TEST_CASE("extension by zeros is affine in t") {
  const std::vector<int> ts{0, 1, 2, 3};
  std::vector<Rational> xs(ts.begin(), ts.end());
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : all_partitions(n))
      for (Family f : {Family{Kind::SL, n}, Family{Kind::SO, n}, Family{Kind::SP, n}}) {
        if (!is_valid(p, f)) continue;
        auto dims = extend_by_zeros_dims(p, f, ts);
        std::vector<Rational> ys(dims.begin(), dims.end());
        CHECK(affine(xs, ys));
        if (f.kind == Kind::SL)
          for (int t : ts) CHECK(extend_case_formula(p, f, t) == dims[t]);
      }
  // so_5, (3,1,1): the quoted slope is not an integer
  CHECK(extend_case_formula(Partition({3, 1, 1}), {Kind::SO, 5}, 1).get_den() == 4);
}
