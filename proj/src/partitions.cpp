#include "nilseries/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "nilseries/linalg.hpp"

namespace nilseries::partitions {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const { return Partition(hat()); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::hat() const {
  std::vector<int> h;
  if (parts_.empty()) return h;
  for (int i = 1; i <= parts_.front(); ++i)
    h.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [i](int p) { return p >= i; })));
  return h;
}

bool Partition::has_distinct_parts() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string Partition::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ')';
  return out.str();
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "-") return Partition();
  std::vector<int> parts;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("bad partition: " + std::string(text));
      parts.push_back(std::stoi(item));
    }
    return Partition(parts);
  }
  // Digit strings with optional exponents: "2211", "2^21^4", "71".
  for (std::size_t i = 0; i < s.size();) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad partition: " + std::string(text));
    int part = s[i] - '0';
    ++i;
    int reps = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("bad exponent in partition: " + std::string(text));
      reps = s[i] - '0';
      ++i;
    }
    for (int k = 0; k < reps; ++k) parts.push_back(part);
  }
  return Partition(parts);
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string Family::tag() const {
  switch (kind) {
    case Kind::SL: return "sl_" + std::to_string(m);
    case Kind::SO: return "so_" + std::to_string(m);
    case Kind::SP: return "sp_" + std::to_string(m);
    case Kind::SLxSL: return "2sl_" + std::to_string(m);
  }
  return {};
}

long Family::algebra_dimension() const {
  const long n = m;
  switch (kind) {
    case Kind::SL: return n * n - 1;
    case Kind::SO: return n * (n - 1) / 2;
    case Kind::SP: return n * (n + 1) / 2;
    case Kind::SLxSL: return 2 * (n * n - 1);
  }
  return 0;
}

Family parse_family(std::string_view tag) {
  std::string s(tag);
  auto underscore = s.find('_');
  if (underscore == std::string::npos) throw std::invalid_argument("bad family tag: " + s);
  std::string head = s.substr(0, underscore);
  int m = std::stoi(s.substr(underscore + 1));
  Family f;
  f.m = m;
  if (head == "sl") f.kind = Kind::SL;
  else if (head == "so") f.kind = Kind::SO;
  else if (head == "sp") f.kind = Kind::SP;
  else if (head == "2sl") f.kind = Kind::SLxSL;
  else throw std::invalid_argument("bad family tag: " + s);
  if (m <= 0 || (f.kind == Kind::SP && m % 2)) throw std::invalid_argument("bad family size: " + s);
  return f;
}

std::string OrbitDatum::str() const {
  if (parts.size() == 1) return parts.front().str();
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i].str();
  return out + ")";
}

bool is_valid(const Partition& p, const Family& f) {
  if (p.size() != f.m) return false;
  for (int part : p.parts()) {
    if (f.kind == Kind::SO && part % 2 == 0 && p.multiplicity(part) % 2) return false;
    if (f.kind == Kind::SP && part % 2 == 1 && p.multiplicity(part) % 2) return false;
  }
  return true;
}

bool is_very_even(const Partition& p, const Family& f) {
  if (f.kind != Kind::SO || p.empty()) return false;
  return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
}

void require_valid(const OrbitDatum& d) {
  const std::size_t expected = d.family.kind == Kind::SLxSL ? 2 : 1;
  if (d.parts.size() != expected)
    throw InvalidPartitionForFamily(d.family.tag() + " needs " + std::to_string(expected) + " partition(s)");
  Family single = d.family;
  if (single.kind == Kind::SLxSL) single.kind = Kind::SL;
  for (const auto& p : d.parts)
    if (!is_valid(p, single)) throw InvalidPartitionForFamily(p.str() + " is not valid for " + d.family.tag());
}

namespace {

long sum_hat_squares(const Partition& p) {
  long s = 0;
  for (int h : p.hat()) s += static_cast<long>(h) * h;
  return s;
}

long odd_multiplicities(const Partition& p) {
  long s = 0;
  for (int i = 1; i <= (p.empty() ? 0 : p.parts().front()); i += 2) s += p.multiplicity(i);
  return s;
}

OrbitDatum single(const Partition& p, const Family& f) { return OrbitDatum{f, {p}}; }

}  // namespace

long orbit_dim_classical(const OrbitDatum& d) {
  require_valid(d);
  const long m = d.family.m;
  const Partition& p = d.parts.front();
  switch (d.family.kind) {
    case Kind::SL: return m * m - sum_hat_squares(p);
    case Kind::SO: return (m * m - sum_hat_squares(p) - m + odd_multiplicities(p)) / 2;
    case Kind::SP: return (m * m - sum_hat_squares(p) + m - odd_multiplicities(p)) / 2;
    case Kind::SLxSL: return 2 * m * m - sum_hat_squares(d.parts[0]) - sum_hat_squares(d.parts[1]);
  }
  return 0;
}

long orbit_dim_classical(const Partition& p, const Family& f) { return orbit_dim_classical(single(p, f)); }

namespace {

using IntMatrix = std::vector<std::vector<int>>;

struct Representative {
  IntMatrix x;
  IntMatrix form;  // empty for SL
};

// Jordan blocks with X e_i = e_{i+1}; a single block carries the form
// <e_i, e_j> = (-1)^i [i + j = d - 1], symmetric for d odd and alternating for
// d even. Blocks of the other parity are paired with their duals.
Representative jordan_representative(const Partition& p, Kind kind) {
  const int n = p.size();
  Representative rep;
  rep.x.assign(n, std::vector<int>(n, 0));
  if (kind != Kind::SL) rep.form.assign(n, std::vector<int>(n, 0));
  int offset = 0;
  auto place_block = [&](int d) {
    for (int i = 0; i + 1 < d; ++i) rep.x[offset + i + 1][offset + i] = 1;
    int start = offset;
    offset += d;
    return start;
  };
  const std::vector<int>& parts = p.parts();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int d = parts[k];
    if (kind == Kind::SL) {
      place_block(d);
      continue;
    }
    const bool self_dual = (kind == Kind::SO) == (d % 2 == 1);
    if (self_dual) {
      int o = place_block(d);
      for (int i = 0; i < d; ++i) rep.form[o + i][o + d - 1 - i] = (i % 2) ? -1 : 1;
    } else {
      // parts are sorted, so the partner block is the next part
      if (k + 1 >= parts.size() || parts[k + 1] != d) throw std::logic_error("unpaired Jordan block");
      int o1 = place_block(d);
      int o2 = place_block(d);
      const int eps = kind == Kind::SO ? 1 : -1;
      for (int i = 0; i < d; ++i) {
        int v = (i % 2) ? -1 : 1;
        rep.form[o1 + i][o2 + d - 1 - i] = v;
        rep.form[o2 + d - 1 - i][o1 + i] = eps * v;
      }
      ++k;
    }
  }
  return rep;
}

// Rows expressing Y^T J + J Y = 0 (or trace Y = 0 for SL) in the n^2 entries of Y.
linalg::Matrix algebra_equations(const Representative& rep, Kind kind, int n) {
  linalg::Matrix rows;
  const std::size_t vars = static_cast<std::size_t>(n) * n;
  if (kind == Kind::SL) {
    linalg::Vector row(vars, Rational(0));
    for (int i = 0; i < n; ++i) row[i * n + i] = 1;
    rows.push_back(row);
    return rows;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      linalg::Vector row(vars, Rational(0));
      bool any = false;
      for (int k = 0; k < n; ++k) {
        if (rep.form[k][j]) { row[k * n + i] += rep.form[k][j]; any = true; }
        if (rep.form[i][k]) { row[k * n + j] += rep.form[i][k]; any = true; }
      }
      if (any) rows.push_back(row);
    }
  return rows;
}

linalg::Matrix commutant_equations(const Representative& rep, int n) {
  linalg::Matrix rows;
  const std::size_t vars = static_cast<std::size_t>(n) * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      linalg::Vector row(vars, Rational(0));
      bool any = false;
      for (int k = 0; k < n; ++k) {
        if (rep.x[i][k]) { row[k * n + j] += rep.x[i][k]; any = true; }
        if (rep.x[k][j]) { row[i * n + k] -= rep.x[k][j]; any = true; }
      }
      if (any) rows.push_back(row);
    }
  return rows;
}

void check_invariance(const Representative& rep, int n) {
  if (rep.form.empty()) return;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += rep.x[k][i] * rep.form[k][j] + rep.form[i][k] * rep.x[k][j];
      if (s != 0) throw std::logic_error("representative does not preserve the form");
    }
}

long single_factor_oracle(const Partition& p, Kind kind) {
  const int n = p.size();
  if (n == 0) return 0;
  Representative rep = jordan_representative(p, kind);
  check_invariance(rep, n);
  linalg::Matrix alg = algebra_equations(rep, kind, n);
  const long vars = static_cast<long>(n) * n;
  const long dim_g = vars - static_cast<long>(linalg::rank(alg));
  linalg::Matrix all = alg;
  linalg::Matrix comm = commutant_equations(rep, n);
  all.insert(all.end(), comm.begin(), comm.end());
  const long dim_c = vars - static_cast<long>(linalg::rank(all));
  return dim_g - dim_c;
}

}  // namespace

long centralizer_oracle(const OrbitDatum& d) {
  require_valid(d);
  if (d.family.kind == Kind::SLxSL)
    return single_factor_oracle(d.parts[0], Kind::SL) + single_factor_oracle(d.parts[1], Kind::SL);
  return single_factor_oracle(d.parts.front(), d.family.kind);
}

long centralizer_oracle(const Partition& p, const Family& f) { return centralizer_oracle(single(p, f)); }

std::string PartitionPair::str() const {
  auto compact = [](const Partition& p) {
    if (p.empty()) return std::string("-");
    std::string s;
    for (int x : p.parts()) s += std::to_string(x);
    return s;
  };
  return "(" + compact(alpha) + "," + compact(beta) + ")";
}

PartitionPair parse_pair(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("partition pair needs a comma: " + std::string(text));
  PartitionPair pp{parse_partition(s.substr(0, comma)), parse_partition(s.substr(comma + 1))};
  if (!pp.beta.has_distinct_parts()) throw std::invalid_argument("beta must have distinct parts: " + std::string(text));
  return pp;
}

Partition pair_to_partition(const PartitionPair& pp, const Family& target) {
  std::vector<int> parts;
  for (int x : pp.alpha.parts()) {
    parts.push_back(x);
    parts.push_back(x);
  }
  if (target.kind == Kind::SP) {
    if (pp.alpha.size() + pp.beta.size() != target.m / 2)
      throw SizeMismatch(pp.str() + " does not parametrize an orbit of " + target.tag());
    for (int x : pp.beta.parts()) parts.push_back(2 * x);
  } else if (target.kind == Kind::SO) {
    if (2 * pp.alpha.size() + pp.beta.size() != target.m)
      throw SizeMismatch(pp.str() + " does not parametrize an orbit of " + target.tag());
    for (int x : pp.beta.parts()) parts.push_back(x);
  } else {
    throw SizeMismatch("partition pairs parametrize sp or so orbits only");
  }
  Partition p(parts);
  if (!is_valid(p, target)) throw InvalidPartitionForFamily(p.str() + " is not valid for " + target.tag());
  return p;
}

Family cell_family(const Cell& c, int n) {
  auto check = [](int x) { return x == 1 || x == 2 || x == 4; };
  if (!check(c.a) || !check(c.b)) throw NotAdjacentCells("cells are indexed by a, b in {1,2,4}");
  const int lo = std::min(c.a, c.b), hi = std::max(c.a, c.b);
  if (lo == 1 && hi == 1) return {Kind::SO, n};
  if (lo == 1 && hi == 2) return {Kind::SL, n};
  if (lo == 1 && hi == 4) return {Kind::SP, 2 * n};
  if (lo == 2 && hi == 2) return {Kind::SLxSL, n};
  if (lo == 2 && hi == 4) return {Kind::SL, 2 * n};
  return {Kind::SO, 4 * n};
}

namespace {

int next_index(int x) { return x == 1 ? 2 : x == 2 ? 4 : 0; }

Partition doubled(const Partition& p) {
  std::vector<int> parts;
  for (int x : p.parts()) {
    parts.push_back(x);
    parts.push_back(x);
  }
  return Partition(parts);
}

// so_n corner size recovered from a datum in cell c.
int corner_size(const OrbitDatum& d, const Cell& c) {
  const int lo = std::min(c.a, c.b), hi = std::max(c.a, c.b);
  if ((lo == 1 && hi == 4) || (lo == 2 && hi == 4)) return d.family.m / 2;
  if (lo == 4) return d.family.m / 4;
  return d.family.m;
}

}  // namespace

OrbitDatum propagate(const OrbitDatum& d, const Cell& from, const Cell& to) {
  require_valid(d);
  const int n = corner_size(d, from);
  if (!(d.family == cell_family(from, n))) throw NotAdjacentCells("datum family does not match the source cell");
  if (from == to) return d;
  const bool right = to.b == from.b && to.a == next_index(from.a);
  const bool down = to.a == from.a && to.b == next_index(from.b);
  if (!right && !down) throw NotAdjacentCells("cells are not adjacent (one step right or down)");
  const Family target = cell_family(to, n);
  const Kind src = d.family.kind, dst = target.kind;
  OrbitDatum out{target, {}};
  if (src == Kind::SO && dst == Kind::SL) out.parts = d.parts;
  else if (src == Kind::SL && dst == Kind::SP) out.parts = {doubled(d.parts[0])};
  else if (src == Kind::SL && dst == Kind::SLxSL) out.parts = {d.parts[0], d.parts[0]};
  else if (src == Kind::SLxSL && dst == Kind::SL) {
    std::vector<int> parts = d.parts[0].parts();
    parts.insert(parts.end(), d.parts[1].parts().begin(), d.parts[1].parts().end());
    out.parts = {Partition(parts)};
  } else if (src == Kind::SP && dst == Kind::SL) out.parts = d.parts;
  else if (src == Kind::SL && dst == Kind::SO) out.parts = {doubled(d.parts[0])};
  else throw NotAdjacentCells("no propagation map from " + d.family.tag() + " to " + target.tag());
  require_valid(out);
  return out;
}

OrbitDatum propagate_path(const OrbitDatum& d, const std::vector<Cell>& path) {
  if (path.empty()) return d;
  OrbitDatum cur = d;
  for (std::size_t i = 1; i < path.size(); ++i) cur = propagate(cur, path[i - 1], path[i]);
  return cur;
}

OrbitDatum propagate_to(const OrbitDatum& d, const Cell& from, const Cell& to) {
  if (to.a < from.a || to.b < from.b) throw NotAdjacentCells("target cell is not right of or below the source");
  std::vector<Cell> path{from};
  Cell c = from;
  while (c.a != to.a) {
    c.a = next_index(c.a);
    path.push_back(c);
  }
  while (c.b != to.b) {
    c.b = next_index(c.b);
    path.push_back(c);
  }
  return propagate_path(d, path);
}

Rational magic_dim_formula(const Partition& p, int a, int b, const Cell& origin) {
  const int n = p.size();
  const bool size_n_origin = origin == Cell{1, 1} || origin == Cell{2, 1} || origin == Cell{1, 2};
  if (!size_n_origin) throw NotAdjacentCells("origin must be a size-n cell of the chart");
  Family f = cell_family(origin, n);
  if (!is_valid(p, f)) throw InvalidPartitionForFamily(p.str() + " is not valid for " + f.tag());
  if (a < origin.a || b < origin.b) throw NotAdjacentCells("cell is not right of or below the origin");
  cell_family({a, b}, n);
  const Rational odd = odd_multiplicities(p);
  return Rational(a * b, 2) * (Rational(n) * n - sum_hat_squares(p) - n + odd) + Rational(a + b - 2) * (n - odd);
}

Rational example2_closed_form(int n, int a, int b) { return 2 * (Rational(a * b) * (n - 2) + a + b - 2); }

Rational example1_closed_form(int n, int a, int b) {
  const int eps = n % 2;
  return Rational(a * b, 2) * (Rational(n) * n - n - 1 + eps) + Rational(a + b + 2) * (n - eps);
}

Partition regular_so_partition(int n) {
  if (n % 2) return Partition({n});
  return Partition({n - 1, 1});
}

namespace {

Partition extended(const Partition& p, int ones) {
  std::vector<int> parts = p.parts();
  for (int i = 0; i < ones; ++i) parts.push_back(1);
  return Partition(parts);
}

}  // namespace

std::vector<long> extend_by_zeros_dims(const Partition& p, const Family& f, const std::vector<int>& t_values) {
  if (f.kind == Kind::SLxSL) throw InvalidPartitionForFamily("extension by zeros is defined for sl, so, sp");
  if (!is_valid(p, f)) throw InvalidPartitionForFamily(p.str() + " is not valid for " + f.tag());
  std::vector<long> dims;
  const int step = f.kind == Kind::SP ? 2 : 1;
  for (int t : t_values) {
    Family g = f;
    g.m += step * t;
    dims.push_back(orbit_dim_classical(extended(p, step * t), g));
  }
  return dims;
}

Rational extend_case_formula(const Partition& p, const Family& f, int t) {
  const Rational base = orbit_dim_classical(p, f);
  const Rational parts = p.length();
  switch (f.kind) {
    case Kind::SL: return 2 * Rational(t) * (f.m - parts) + base;
    case Kind::SO: return Rational(t) * (f.m - parts - Rational(3, 4)) + base;
    case Kind::SP: return 2 * Rational(t) * (Rational(f.m / 2) - parts + Rational(3, 4)) + base;
    case Kind::SLxSL: break;
  }
  throw InvalidPartitionForFamily("extension by zeros is defined for sl, so, sp");
}

}  // namespace nilseries::partitions
