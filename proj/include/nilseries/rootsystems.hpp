#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nilseries/linalg.hpp"

namespace nilseries::rootsystems {

enum class Family { A, B, C, D, E, F, G };

struct AlgebraType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // "E8", "C3"
  auto operator<=>(const AlgebraType&) const = default;
};

class UnsupportedRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AdjointNotFundamental : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Validates family/rank combinations; throws UnsupportedRank.
AlgebraType make_algebra(Family family, int rank);
// Accepts Cartan names ("E8", "c3") and classical names ("sp6", "so12",
// "sl6"). so_n for n < 5 and so_6 map to their isomorphic types where simple.
AlgebraType parse_algebra(std::string_view text);

long positive_root_count(const AlgebraType& t);
long dimension(const AlgebraType& t);
std::vector<int> invariant_degrees(const AlgebraType& t);

// Coefficients in the basis of simple roots.
using RootVec = std::vector<int>;

struct RootSystem {
  AlgebraType algebra;
  std::vector<linalg::Vector> simple_roots;  // orthonormal-model coordinates
  linalg::Matrix gram;                       // scaled so that <highest, highest> = 2
  std::vector<std::vector<int>> cartan;      // cartan[i][j] = 2<a_i,a_j>/<a_j,a_j>
  std::vector<RootVec> positive_roots;       // by height, then lexicographic
  std::vector<linalg::Vector> fundamental_weights;  // simple-root coordinates
  RootVec highest_root;
  linalg::Vector rho;  // simple-root coordinates
  long N = 0;
  std::vector<int> invariant_degrees;

  int rank() const { return algebra.rank; }
  long dimension() const { return rank() + 2 * N; }
  Rational inner(const linalg::Vector& x, const linalg::Vector& y) const;
  // <x, a_i^vee> for x in simple-root coordinates.
  Rational coroot_pairing(const linalg::Vector& x, int i) const;
  std::vector<std::vector<int>> neighbours() const;
};

RootSystem build_root_system(const AlgebraType& t);
// Shared immutable instance.
const RootSystem& root_system(const AlgebraType& t);

linalg::Vector to_vector(const RootVec& r);
int height(const RootVec& r);

struct WeightedDiagram {
  AlgebraType algebra;
  std::vector<int> labels;

  bool is_even() const;
  bool operator==(const WeightedDiagram&) const = default;
};

std::map<int, long> grading_dims(const WeightedDiagram& wd);
long orbit_dim_from_diagram(const WeightedDiagram& wd);

struct DesingDims {
  long base = 0;
  long fiber = 0;
};
DesingDims desing_dims(const WeightedDiagram& wd);

long dual_coxeter(const RootSystem& rs);
WeightedDiagram minimal_orbit_diagram(const RootSystem& rs);
WeightedDiagram sigma1_diagram(const RootSystem& rs);

// Preferred weights of a row, as fundamental-weight coefficients per algebra.
struct WeightTable {
  std::vector<std::string> names;
  std::map<AlgebraType, std::vector<std::vector<int>>> weights;

  bool covers(const AlgebraType& t) const { return weights.count(t) != 0; }
  bool operator==(const WeightTable&) const = default;
};

WeightedDiagram series_weight_to_diagram(const std::vector<int>& exponents, const AlgebraType& t,
                                         const WeightTable& table);

// "2,0,0,0,1,0,1/0": for type E the horizontal chain (nodes 1,3,4,...) then
// the branch node 2 after a slash; other types list nodes in order.
std::string diagram_string(const WeightedDiagram& wd);
// "2 0 0 0 1 0 1 / branch 0"
std::string diagram_layout(const WeightedDiagram& wd);

}  // namespace nilseries::rootsystems
