#include "nilseries/seriesdb.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nilseries::seriesdb {

namespace detail {
extern const std::string_view kSeriesData;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<Rational> rationals(std::string_view s) {
  std::vector<Rational> out;
  for (const auto& w : words(s)) out.push_back(parse_rational(w));
  return out;
}

std::pair<std::string, std::string> key_value(std::string_view line) {
  auto eq = line.find('=');
  if (eq == std::string_view::npos) throw DataError("expected key = value: " + std::string(line));
  return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

}  // namespace

std::string row_tag(Row r) {
  switch (r) {
    case Row::F4: return "f4";
    case Row::E6: return "e6";
    case Row::Subexceptional: return "subexc";
    case Row::Severi: return "severi";
    case Row::Subseveri: return "subseveri";
  }
  return "?";
}

Row parse_row(std::string_view tag) {
  for (Row r : all_rows())
    if (row_tag(r) == tag) return r;
  throw std::invalid_argument("unknown row: " + std::string(tag) + " (f4, e6, subexc, severi, subseveri)");
}

std::vector<Row> all_rows() { return {Row::F4, Row::E6, Row::Subexceptional, Row::Severi, Row::Subseveri}; }

ReductiveSpec ReductiveSpec::parse(std::string_view text) {
  ReductiveSpec spec;
  std::string t = trim(text);
  if (t == "0") return spec;
  for (const auto& term : split(t, '+')) {
    std::size_t i = 0;
    int k = 1;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    if (i > 0) k = std::stoi(term.substr(0, i));
    if (i >= term.size()) throw DataError("bad reductive term: " + term);
    char letter = term[i];
    std::string rank = term.substr(i + 1);
    if (rank.empty() || !std::all_of(rank.begin(), rank.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw DataError("bad reductive term: " + term);
    if (letter == 'T') {
      spec.torus_rank += k * std::stoi(rank);
      continue;
    }
    AlgebraType type = rootsystems::parse_algebra(std::string(1, letter) + rank);
    for (int j = 0; j < k; ++j) spec.simple_factors.push_back(type);
  }
  std::sort(spec.simple_factors.begin(), spec.simple_factors.end());
  return spec;
}

std::string ReductiveSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < simple_factors.size();) {
    std::size_t j = i;
    while (j < simple_factors.size() && simple_factors[j] == simple_factors[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += simple_factors[i].name();
    i = j;
  }
  if (torus_rank > 0) out += (out.empty() ? "T" : "+T") + std::to_string(torus_rank);
  return out.empty() ? "0" : out;
}

long ReductiveSpec::dim() const {
  long d = torus_rank;
  for (const auto& f : simple_factors) d += rootsystems::dimension(f);
  return d;
}

long ReductiveSpec::positive_roots() const {
  long n = 0;
  for (const auto& f : simple_factors) n += rootsystems::positive_root_count(f);
  return n;
}

ProductExpr group_order(const ReductiveSpec& spec) {
  std::map<int, int> degrees;
  for (const auto& f : spec.simple_factors)
    for (int d : rootsystems::invariant_degrees(f)) ++degrees[d];
  if (spec.torus_rank) degrees[1] += spec.torus_rank;
  ProductExpr out = exactpoly::q_power(LinExp(Rational(spec.positive_roots())));
  for (const auto& [d, m] : degrees) out *= exactpoly::cyclo_power(LinExp(Rational(d)), 1, m);
  return out;
}

ReductiveSpec member_algebra(std::string_view tag) {
  auto family = member_family(tag);
  if (!family) return ReductiveSpec::parse(tag);
  ReductiveSpec spec;
  switch (family->kind) {
    case partitions::Kind::SL: spec.simple_factors = {rootsystems::parse_algebra("sl" + std::to_string(family->m))}; break;
    case partitions::Kind::SO: spec.simple_factors = {rootsystems::parse_algebra("so" + std::to_string(family->m))}; break;
    case partitions::Kind::SP: spec.simple_factors = {rootsystems::parse_algebra("sp" + std::to_string(family->m))}; break;
    case partitions::Kind::SLxSL: {
      auto t = rootsystems::parse_algebra("sl" + std::to_string(family->m));
      spec.simple_factors = {t, t};
      break;
    }
  }
  return spec;
}

std::optional<partitions::Family> member_family(std::string_view tag) {
  if (tag.find('_') == std::string_view::npos) return std::nullopt;
  return partitions::parse_family(tag);
}

partitions::OrbitDatum ClassicalDatum::orbit() const {
  partitions::Family f = partitions::parse_family(family);
  partitions::OrbitDatum d{f, {}};
  if (kind == "part") {
    d.parts = {partitions::parse_partition(text)};
  } else if (kind == "pair") {
    d.parts = {partitions::pair_to_partition(partitions::parse_pair(text), f)};
  } else if (kind == "pairs") {
    auto pieces = split(text, '/');
    if (pieces.size() != 2) throw DataError("pairs datum needs two partitions: " + text);
    d.parts = {partitions::parse_partition(pieces[0]), partitions::parse_partition(pieces[1])};
  } else {
    throw DataError("unknown classical kind: " + kind);
  }
  return d;
}

std::size_t SeriesRecord::index_of(const Rational& a) const {
  for (std::size_t i = 0; i < a_values.size(); ++i)
    if (a_values[i] == a) return i;
  throw std::out_of_range("series " + label + " has no member at a=" + to_string(a));
}

bool SeriesRecord::has_a(const Rational& a) const {
  return std::find(a_values.begin(), a_values.end(), a) != a_values.end();
}

const CharacterExpr* SeriesRecord::character(std::string_view name) const {
  for (const auto& c : characters)
    if (c.name == name) return &c;
  return nullptr;
}

std::string RowInfo::member_at(const Rational& a) const {
  for (const auto& [value, tag] : members)
    if (value == a) return tag;
  throw std::out_of_range("row " + row_tag(row) + " has no member at a=" + to_string(a));
}

std::string render_label(const std::vector<int>& exponents, const std::vector<std::string>& names) {
  if (exponents.size() != names.size()) throw std::invalid_argument("label arity mismatch");
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += ".";
    out += names[i];
    if (exponents[i] != 1) {
      bool upper = std::isupper(static_cast<unsigned char>(names[i].back()));
      out += (upper ? "" : "^") + std::to_string(exponents[i]);
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<int> parse_label(std::string_view text, const std::vector<std::string>& names) {
  std::vector<int> exps(names.size(), 0);
  std::string t = trim(text);
  if (t == "0") return exps;
  for (const auto& token : split(t, '.')) {
    std::size_t best = names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (token.rfind(names[i], 0) == 0 && (best == names.size() || names[i].size() > names[best].size())) best = i;
    if (best == names.size()) throw std::invalid_argument("unknown label factor: " + token);
    std::string rest = token.substr(names[best].size());
    if (!rest.empty() && rest[0] == '^') rest = rest.substr(1);
    int e = 1;
    if (!rest.empty()) {
      if (!std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad exponent in label factor: " + token);
      e = std::stoi(rest);
    }
    exps[best] += e;
  }
  return exps;
}

Registry Registry::parse(std::string_view text) {
  Registry reg;
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> header;
  SeriesRecord* rec = nullptr;
  RowInfo* row = nullptr;
  int line_no = 0;

  auto fail = [&](const std::string& what) -> DataError {
    return DataError("series data line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw fail("unterminated block header");
      header = words(t.substr(1, t.size() - 2));
      rec = nullptr;
      row = nullptr;
      if (header.empty()) throw fail("empty block header");
      if (header[0] == "series") {
        if (header.size() != 3) throw fail("series header needs a row and a label");
        reg.records_.emplace_back();
        rec = &reg.records_.back();
        rec->row = parse_row(header[1]);
        rec->label = header[2];
      } else if (header[0] == "row") {
        if (header.size() != 2) throw fail("row header needs a tag");
        reg.rows_.emplace_back();
        row = &reg.rows_.back();
        row->row = parse_row(header[1]);
      } else if (header[0] != "define" && header[0] != "weights" && header[0] != "hasse") {
        throw fail("unknown block " + header[0]);
      }
      continue;
    }
    if (header.empty()) throw fail("data outside a block");
    auto [key, value] = key_value(t);
    if (rec && key.rfind("define ", 0) == 0) {
      // "define name = expr"
      value = trim(key.substr(7)) + " = " + value;
      key = "define";
    }
    try {
      if (header[0] == "define") {
        if (key != "expr" || header.size() != 2) throw fail("define blocks hold one expr line");
        reg.defines_.emplace_back(header[1], value);
      } else if (header[0] == "weights") {
        if (key == "names") {
          reg.weights_.names = words(value);
        } else {
          AlgebraType type = rootsystems::parse_algebra(key);
          std::vector<std::vector<int>> ws;
          for (const auto& piece : split(value, '|')) {
            std::vector<int> w;
            for (const auto& x : words(piece)) w.push_back(std::stoi(x));
            if (static_cast<int>(w.size()) != type.rank) throw fail("weight length differs from rank of " + key);
            ws.push_back(w);
          }
          reg.weights_.weights[type] = ws;
        }
      } else if (header[0] == "hasse") {
        auto parts = split(value, '>');
        if (key != "edge" || parts.size() != 2) throw fail("hasse edges read upper > lower");
        reg.hasse_.push_back({parts[0], parts[1]});
      } else if (row) {
        if (key == "names") row->names = words(value);
        else if (key == "members") {
          for (const auto& w : words(value)) {
            auto colon = w.find(':');
            if (colon == std::string::npos) throw fail("members read a:tag");
            row->members.emplace_back(parse_rational(w.substr(0, colon)), w.substr(colon + 1));
          }
        } else throw fail("unknown row key " + key);
      } else if (rec) {
        if (key == "exponents") {
          for (const auto& w : words(value)) rec->exponents.push_back(std::stoi(w));
        } else if (key == "display") rec->display = value;
        else if (key == "a") rec->a_values = rationals(value);
        else if (key == "carter") rec->carter = split(value, '|');
        else if (key == "classical") {
          auto w = words(value);
          if (w.size() != 4) throw fail("classical reads: a family kind datum");
          rec->classical.push_back({parse_rational(w[0]), w[1], w[2], w[3]});
        } else if (key == "dim") rec->dim = exactpoly::parse_linexp(value);
        else if (key == "rad") rec->rad = exactpoly::parse_linexp(value);
        else if (key == "h") {
          for (const auto& piece : split(value, '|')) rec->h.push_back(ReductiveSpec::parse(piece));
        } else if (key == "h_printed") rec->h_printed = split(value, '|');
        else if (key == "group") {
          if (value != "trivial" && value != "Z2" && value != "mixed") throw fail("group is trivial, Z2 or mixed");
          rec->group = value;
        } else if (key == "fold") rec->fold = value == "yes";
        else if (key == "points") rec->points_text = value;
        else if (key == "points_display") rec->points_display_text = value;
        else if (key == "grading") {
          GradingClaim g;
          g.text = value;
          auto w = words(value);
          if (!w.empty() && w[0] == "double") {
            if (w.size() != 2) throw fail("grading double needs a label");
            g.kind = GradingClaim::Kind::Double;
            g.other = w[1];
          } else if (!w.empty() && w[0] == "nonzero") {
            if (w.size() != 2) throw fail("grading nonzero needs a count");
            g.kind = GradingClaim::Kind::Nonzero;
            g.count = std::stoi(w[1]);
          } else {
            auto colon = value.find(':');
            if (colon == std::string::npos) throw fail("grading reads i : value");
            g.degree = std::stoi(trim(value.substr(0, colon)));
            std::string body = value.substr(colon + 1);
            auto at = body.find('@');
            if (at != std::string::npos) {
              g.a_values = rationals(body.substr(at + 1));
              body = body.substr(0, at);
            }
            if (g.degree == 0) {
              g.kind = GradingClaim::Kind::Zero;
              for (const auto& piece : split(body, '|')) g.zero.push_back(ReductiveSpec::parse(piece));
            } else {
              g.kind = GradingClaim::Kind::Dim;
              g.dim = exactpoly::parse_linexp(trim(body));
            }
          }
          rec->gradings.push_back(g);
        } else if (key == "define") {
          auto [name, expr] = key_value(value);
          rec->defines.emplace_back(name, expr);
        } else if (key == "character") {
          auto p = split(value, '|');
          if (p.size() != 3) throw fail("character reads name | a-list | expr");
          rec->characters.push_back({p[0], rationals(p[1]), p[2], {}});
        } else if (key == "explicit") {
          auto p = split(value, '|');
          if (p.size() != 3) throw fail("explicit reads name | a | expr");
          rec->explicit_formulas.push_back({p[0], parse_rational(p[1]), p[2], {}});
        } else if (key == "named") {
          auto p = split(value, '|');
          if (p.size() != 3) throw fail("named reads a | mode | names");
          if (p[1] != "sum" && p[1] != "double" && p[1] != "each") throw fail("named mode is sum, double or each");
          rec->named.push_back({parse_rational(p[0]), p[1], words(p[2])});
        } else if (key == "pair") {
          auto p = split(value, ',');
          if (p.size() != 2) throw fail("pair reads name, name");
          rec->pair = std::make_pair(p[0], p[1]);
        } else if (key == "fix") {
          auto p = split(value, '|');
          if (p.size() != 3) throw fail("fix reads target | note | expr");
          rec->fixes.push_back({p[0], p[1], p[2]});
        } else if (key == "note") rec->notes.push_back(value);
        else throw fail("unknown series key " + key);
      } else {
        throw fail("unexpected line");
      }
    } catch (const DataError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  }
  reg.resolve();
  return reg;
}

void Registry::resolve() {
  for (auto& r : rows_)
    if ((r.row == Row::F4 || r.row == Row::E6) && r.names.empty()) r.names = weights_.names;
  for (auto& rec : records_) {
    const RowInfo& info = row(rec.row);
    auto where = [&](const std::string& what) {
      return DataError("series " + row_tag(rec.row) + " " + rec.label + ": " + what);
    };
    if (!rec.exponents.empty()) {
      if (rec.exponents.size() != info.names.size()) throw where("exponent count differs from the row's weights");
      std::vector<int> listed;
      try {
        listed = parse_label(rec.label, info.names);
      } catch (const std::invalid_argument& e) {
        throw where(e.what());
      }
      std::string canonical = render_label(rec.exponents, info.names);
      if (listed != rec.exponents) throw where("label does not match exponents (" + canonical + ")");
      // The header keeps the listed factor order; the label is canonical.
      if (rec.display.empty()) rec.display = rec.label;
      rec.label = canonical;
    }
    if (rec.display.empty()) rec.display = rec.label;
    const std::size_t n = rec.a_values.size();
    if (n == 0) throw where("no a values");
    if (rec.carter.size() != n) throw where("carter list length");
    if (rec.h.size() != n) throw where("h list length");
    if (!rec.h_printed.empty() && rec.h_printed.size() != n) throw where("h_printed list length");
    for (const auto& a : rec.a_values) info.member_at(a);
    for (const auto& g : rec.gradings) {
      if (g.kind != GradingClaim::Kind::Zero) continue;
      std::size_t expect = g.a_values.empty() ? n : g.a_values.size();
      if (g.zero.size() != expect) throw where("grading 0 list length");
    }
    try {
      for (auto& c : rec.characters) c.expr = parse_expr(rec, c.text);
      for (auto& e : rec.explicit_formulas) e.expr = parse_expr(rec, e.text);
      if (!rec.points_text.empty()) parse_expr(rec, rec.points_text);
      if (!rec.points_display_text.empty()) parse_expr(rec, rec.points_display_text);
      for (const auto& f : rec.fixes) parse_expr(rec, f.text, true);
    } catch (const DataError&) {
      throw;
    } catch (const std::exception& e) {
      throw where(e.what());
    }
  }
}

std::vector<const SeriesRecord*> Registry::row_records(Row r) const {
  std::vector<const SeriesRecord*> out;
  for (const auto& rec : records_)
    if (rec.row == r) out.push_back(&rec);
  return out;
}

const SeriesRecord& Registry::lookup(Row r, std::string_view label) const {
  const std::string want = trim(label);
  const RowInfo& info = row(r);
  std::optional<std::vector<int>> exps;
  if (!info.names.empty()) {
    try {
      exps = parse_label(want, info.names);
    } catch (const std::invalid_argument&) {
    }
  }
  for (const auto& rec : records_) {
    if (rec.row != r) continue;
    if (rec.label == want || rec.display == want) return rec;
    for (const auto& piece : split(rec.display, '='))
      if (piece == want) return rec;
    if (exps && !rec.exponents.empty() && rec.exponents == *exps) return rec;
  }
  throw UnknownSeries("no series " + want + " in row " + row_tag(r));
}

const RowInfo& Registry::row(Row r) const {
  for (const auto& info : rows_)
    if (info.row == r) return info;
  throw DataError("row " + row_tag(r) + " is missing from the series data");
}

ProductExpr Registry::parse_expr(const SeriesRecord& rec, std::string_view text, bool apply_fixes) const {
  std::map<std::string, ProductExpr, std::less<>> names;
  for (const auto& [name, body] : defines_) names[name] = exactpoly::parse_product(body, names);
  for (const auto& [name, body] : rec.defines) {
    std::string source = body;
    if (apply_fixes)
      for (const auto& f : rec.fixes)
        if (f.target == name) source = f.text;
    names[name] = exactpoly::parse_product(source, names);
  }
  return exactpoly::parse_product(text, names);
}

std::optional<ProductExpr> Registry::points(const SeriesRecord& rec) const {
  if (rec.points_text.empty()) return std::nullopt;
  return parse_expr(rec, rec.points_text);
}

const Registry& Registry::builtin() {
  static const Registry reg = parse(detail::kSeriesData);
  return reg;
}

}  // namespace nilseries::seriesdb
