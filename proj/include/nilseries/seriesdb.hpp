#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nilseries/exactpoly.hpp"
#include "nilseries/partitions.hpp"
#include "nilseries/rootsystems.hpp"

namespace nilseries::seriesdb {

using exactpoly::LinExp;
using exactpoly::ProductExpr;
using rootsystems::AlgebraType;

enum class Row { F4, E6, Subexceptional, Severi, Subseveri };

// "f4", "e6", "subexc", "severi", "subseveri"
std::string row_tag(Row r);
Row parse_row(std::string_view tag);
std::vector<Row> all_rows();

class UnknownSeries : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReductiveSpec {
  std::vector<AlgebraType> simple_factors;  // sorted
  int torus_rank = 0;

  // "C3+T1", "3A1", "A1+G2", "2A2+A1+T2", "0"
  static ReductiveSpec parse(std::string_view text);
  std::string str() const;
  long dim() const;
  long positive_roots() const;
  bool operator==(const ReductiveSpec&) const = default;
};

// q^(sum N) * prod (q^d - 1) over all invariant degrees * (q-1)^torus_rank
ProductExpr group_order(const ReductiveSpec& spec);

// Member tags: "F4", "E7", "so_8", "sp_6", "sl_6", "2sl_3".
ReductiveSpec member_algebra(std::string_view tag);
std::optional<partitions::Family> member_family(std::string_view tag);

struct ClassicalDatum {
  Rational a;
  std::string family;  // tag
  std::string kind;    // part, pair, pairs
  std::string text;

  partitions::OrbitDatum orbit() const;
  bool operator==(const ClassicalDatum&) const = default;
};

struct GradingClaim {
  enum class Kind { Dim, Zero, Double, Nonzero };
  Kind kind = Kind::Dim;
  int degree = 0;
  LinExp dim;                          // Dim
  std::vector<ReductiveSpec> zero;     // Zero, aligned with a_values
  std::string other;                   // Double
  int count = 0;                       // Nonzero
  std::vector<Rational> a_values;      // empty: every member a > 0
  std::string text;

  bool operator==(const GradingClaim&) const = default;
};

struct CharacterExpr {
  std::string name;
  std::vector<Rational> a_values;
  std::string text;
  ProductExpr expr;
  bool operator==(const CharacterExpr&) const = default;
};

struct ExplicitFormula {
  std::string name;
  Rational a;
  std::string text;
  ProductExpr expr;
  bool operator==(const ExplicitFormula&) const = default;
};

// Characters attached to one member.  mode: "sum" (one character, the sum of
// the pair), "double" (one character, twice the single expression), "each".
struct NamedCharacters {
  Rational a;
  std::string mode;
  std::vector<std::string> names;
  bool operator==(const NamedCharacters&) const = default;
};

struct Fix {
  std::string target;  // a local define or "points"
  std::string note;
  std::string text;
  bool operator==(const Fix&) const = default;
};

struct SeriesRecord {
  Row row = Row::F4;
  std::string label;    // canonical ASCII label
  std::string display;  // as listed
  std::vector<int> exponents;
  std::vector<Rational> a_values;
  std::vector<std::string> carter;
  std::vector<ClassicalDatum> classical;
  LinExp dim, rad;
  std::vector<ReductiveSpec> h;
  std::vector<std::string> h_printed;
  std::string group = "trivial";
  bool fold = false;
  std::string points_text;  // empty when absent
  std::string points_display_text;
  std::vector<GradingClaim> gradings;
  std::vector<std::pair<std::string, std::string>> defines;
  std::vector<CharacterExpr> characters;
  std::vector<ExplicitFormula> explicit_formulas;
  std::vector<NamedCharacters> named;
  std::optional<std::pair<std::string, std::string>> pair;
  std::vector<Fix> fixes;
  std::vector<std::string> notes;

  // Index into the per-a lists; throws if a is not a member.
  std::size_t index_of(const Rational& a) const;
  bool has_a(const Rational& a) const;
  const CharacterExpr* character(std::string_view name) const;
  bool operator==(const SeriesRecord&) const = default;
};

struct HasseEdge {
  std::string upper, lower;
  bool operator==(const HasseEdge&) const = default;
};

struct RowInfo {
  Row row = Row::F4;
  std::vector<std::string> names;  // preferred weights, when the row has any
  std::vector<std::pair<Rational, std::string>> members;

  std::string member_at(const Rational& a) const;
  bool operator==(const RowInfo&) const = default;
};

// "g.g3.gQ2": a base ending in an upper-case letter takes its exponent as a
// plain suffix, other bases as "^k".
std::string render_label(const std::vector<int>& exponents, const std::vector<std::string>& names);
std::vector<int> parse_label(std::string_view text, const std::vector<std::string>& names);

class Registry {
 public:
  static const Registry& builtin();
  static Registry parse(std::string_view text);

  const std::vector<SeriesRecord>& records() const { return records_; }
  std::vector<const SeriesRecord*> row_records(Row r) const;
  const SeriesRecord& lookup(Row r, std::string_view label) const;
  const RowInfo& row(Row r) const;
  const rootsystems::WeightTable& weights() const { return weights_; }
  const std::vector<HasseEdge>& hasse() const { return hasse_; }
  const std::vector<std::pair<std::string, std::string>>& defines() const { return defines_; }

  // Parses an expression in the scope of the global and record defines;
  // with apply_fixes the record's corrected defines take precedence.
  ProductExpr parse_expr(const SeriesRecord& rec, std::string_view text, bool apply_fixes = false) const;
  std::optional<ProductExpr> points(const SeriesRecord& rec) const;

  nlohmann::json to_json() const;
  static Registry from_json(const nlohmann::json& j);

  bool operator==(const Registry&) const = default;

 private:
  std::vector<SeriesRecord> records_;
  std::vector<RowInfo> rows_;
  rootsystems::WeightTable weights_;
  std::vector<HasseEdge> hasse_;
  std::vector<std::pair<std::string, std::string>> defines_;

  // Parses every stored expression text once the tables are in place.
  void resolve();
};

}  // namespace nilseries::seriesdb
