#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nilseries/exactpoly.hpp"

namespace nilseries::partitions {

class Partition {
 public:
  Partition() = default;
  // Sorts into weakly decreasing order; rejects nonpositive parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  Partition transpose() const;
  // r_i: number of parts equal to i.
  int multiplicity(int i) const;
  // Transpose parts hat-lambda_i = sum_{j >= i} r_j, i = 1..largest part.
  std::vector<int> hat() const;
  bool has_distinct_parts() const;
  bool operator==(const Partition&) const = default;

  // "(2,2,1,1)", or "()" when empty.
  std::string str() const;

 private:
  std::vector<int> parts_;
};

// Accepts "2 2 1 1", "(2,2,1,1)", "(2^21^4)", "2211" (single-digit parts),
// "-" or "" for the empty partition.
Partition parse_partition(std::string_view text);
std::vector<Partition> all_partitions(int n);

enum class Kind { SL, SO, SP, SLxSL };

// m is the size of the natural representation (SP: m = 2n; SLxSL: each factor sl_m).
struct Family {
  Kind kind = Kind::SL;
  int m = 1;

  std::string tag() const;  // "sl_6", "so_12", "sp_6", "2sl_3"
  long algebra_dimension() const;
  bool operator==(const Family&) const = default;
};

Family parse_family(std::string_view tag);

class InvalidPartitionForFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAdjacentCells : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One partition per simple factor (two for SLxSL).
struct OrbitDatum {
  Family family;
  std::vector<Partition> parts;

  bool operator==(const OrbitDatum&) const = default;
  std::string str() const;
};

bool is_valid(const Partition& p, const Family& f);
// All parts even: for SO this labels two orbits of equal dimension.
bool is_very_even(const Partition& p, const Family& f);
void require_valid(const OrbitDatum& d);

long orbit_dim_classical(const OrbitDatum& d);
long orbit_dim_classical(const Partition& p, const Family& f);

// Dimension of the Lie algebra minus the nullity of the commutant system of a
// Jordan-form representative, all computed by exact elimination.
long centralizer_oracle(const OrbitDatum& d);
long centralizer_oracle(const Partition& p, const Family& f);

struct PartitionPair {
  Partition alpha;
  Partition beta;  // distinct parts

  std::string str() const;  // "(11,1)", "(21,-)", "(-,3)"
  bool operator==(const PartitionPair&) const = default;
};

PartitionPair parse_pair(std::string_view text);
// sp targets: alpha parts twice and beta parts doubled, |alpha|+|beta| = n.
// so targets: alpha parts twice and beta parts kept, 2|alpha|+|beta| = m.
Partition pair_to_partition(const PartitionPair& pp, const Family& target);

// Cells of the generalized magic square, a, b in {1, 2, 4}.
struct Cell {
  int a = 1;
  int b = 1;
  bool operator==(const Cell&) const = default;
};

// Family at cell (a, b) when the (1,1) corner is so_n.
Family cell_family(const Cell& c, int n);
// One step right or down (or the identity).
OrbitDatum propagate(const OrbitDatum& d, const Cell& from, const Cell& to);
// Composition along a path of adjacent cells.
OrbitDatum propagate_path(const OrbitDatum& d, const std::vector<Cell>& path);
// Right to the target column, then down.
OrbitDatum propagate_to(const OrbitDatum& d, const Cell& from, const Cell& to);

// The bilinear dimension formula. p must be valid at `origin` (default the
// so_n corner); the formula itself is evaluated verbatim.
Rational magic_dim_formula(const Partition& p, int a, int b, const Cell& origin = {1, 1});

// Closed forms quoted for two worked examples.
Rational example2_closed_form(int n, int a, int b);
// eps = 1 for n odd, 0 for n even, as the parity flag of the example.
Rational example1_closed_form(int n, int a, int b);
// Regular orbit of so_n: (n) for n odd, (n-1, 1) for n even.
Partition regular_so_partition(int n);

// Adds t parts equal to 1 per step (2t for SP so the family stays valid).
std::vector<long> extend_by_zeros_dims(const Partition& p, const Family& f, const std::vector<int>& t_values);
// The three case formulas as quoted, rational-valued.
Rational extend_case_formula(const Partition& p, const Family& f, int t);

}  // namespace nilseries::partitions
