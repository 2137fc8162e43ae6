#include "nilseries/rootsystems.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>

namespace nilseries::rootsystems {

using linalg::Vector;

namespace {

constexpr int kMaxClassicalRank = 12;

Vector unit(std::size_t dim, std::size_t i, const Rational& c = 1) {
  Vector v(dim, Rational(0));
  v[i] = c;
  return v;
}

Vector diff(std::size_t dim, std::size_t i, std::size_t j) {
  Vector v(dim, Rational(0));
  v[i] = 1;
  v[j] = -1;
  return v;
}

std::vector<Vector> model_simple_roots(const AlgebraType& t) {
  const int n = t.rank;
  std::vector<Vector> roots;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) roots.push_back(diff(n + 1, i, i + 1));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(n, i, i + 1));
      if (t.family == Family::B) roots.push_back(unit(n, n - 1));
      else if (t.family == Family::C) roots.push_back(unit(n, n - 1, 2));
      else {
        Vector v(n, Rational(0));
        v[n - 2] = 1;
        v[n - 1] = 1;
        roots.push_back(v);
      }
      break;
    case Family::G:
      roots.push_back({1, -1, 0});
      roots.push_back({-2, 1, 1});
      break;
    case Family::F: {
      const Rational h(1, 2);
      roots.push_back({0, 1, -1, 0});
      roots.push_back({0, 0, 1, -1});
      roots.push_back({0, 0, 0, 1});
      roots.push_back({h, -h, -h, -h});
      break;
    }
    case Family::E: {
      const Rational h(1, 2);
      std::vector<Vector> e8;
      e8.push_back({h, -h, -h, -h, -h, -h, -h, h});
      Vector a2(8, Rational(0));
      a2[0] = 1;
      a2[1] = 1;
      e8.push_back(a2);
      for (int i = 1; i <= 6; ++i) e8.push_back(diff(8, i, i - 1));
      roots.assign(e8.begin(), e8.begin() + n);
      break;
    }
  }
  return roots;
}

RootVec simple(int rank, int i) {
  RootVec r(rank, 0);
  r[i] = 1;
  return r;
}

}  // namespace

std::string AlgebraType::name() const {
  static const char kLetters[] = "ABCDEFG";
  return std::string(1, kLetters[static_cast<int>(family)]) + std::to_string(rank);
}

AlgebraType make_algebra(Family family, int rank) {
  AlgebraType t{family, rank};
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1 && rank <= kMaxClassicalRank; break;
    case Family::B:
    case Family::C: ok = rank >= 2 && rank <= kMaxClassicalRank; break;
    case Family::D: ok = rank >= 4 && rank <= kMaxClassicalRank; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw UnsupportedRank("unsupported simple type " + t.name());
  return t;
}

AlgebraType parse_algebra(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto number_after = [&](std::size_t prefix) -> int {
    if (s.size() <= prefix) throw std::invalid_argument("missing rank in algebra name: " + std::string(text));
    for (std::size_t i = prefix; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("bad algebra name: " + std::string(text));
    return std::stoi(s.substr(prefix));
  };
  if (s.rfind("sl", 0) == 0) return make_algebra(Family::A, number_after(2) - 1);
  if (s.rfind("sp", 0) == 0) {
    int m = number_after(2);
    if (m % 2) throw std::invalid_argument("sp needs an even size: " + std::string(text));
    return m == 2 ? make_algebra(Family::A, 1) : make_algebra(Family::C, m / 2);
  }
  if (s.rfind("so", 0) == 0) {
    int m = number_after(2);
    if (m == 3) return make_algebra(Family::A, 1);
    if (m == 6) return make_algebra(Family::A, 3);
    if (m % 2) return make_algebra(Family::B, (m - 1) / 2);
    if (m < 8) throw UnsupportedRank("so" + std::to_string(m) + " is not simple");
    return make_algebra(Family::D, m / 2);
  }
  static const std::string kLetters = "abcdefg";
  if (s.size() >= 2 && kLetters.find(s[0]) != std::string::npos) {
    return make_algebra(static_cast<Family>(kLetters.find(s[0])), number_after(1));
  }
  throw std::invalid_argument("unknown algebra: " + std::string(text));
}

long positive_root_count(const AlgebraType& t) {
  const long n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

long dimension(const AlgebraType& t) { return t.rank + 2 * positive_root_count(t); }

std::vector<int> invariant_degrees(const AlgebraType& t) {
  const int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
  }
  return d;
}

linalg::Vector to_vector(const RootVec& r) {
  Vector v;
  v.reserve(r.size());
  for (int c : r) v.emplace_back(c);
  return v;
}

int height(const RootVec& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

Rational RootSystem::inner(const Vector& x, const Vector& y) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (y[j] != 0) s += x[i] * gram[i][j] * y[j];
  }
  return s;
}

Rational RootSystem::coroot_pairing(const Vector& x, int i) const {
  Rational s = 0;
  for (int j = 0; j < rank(); ++j) s += x[j] * cartan[j][i];
  return s;
}

std::vector<std::vector<int>> RootSystem::neighbours() const {
  std::vector<std::vector<int>> out(rank());
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (i != j && cartan[i][j] != 0) out[i].push_back(j);
  return out;
}

RootSystem build_root_system(const AlgebraType& t) {
  make_algebra(t.family, t.rank);
  RootSystem rs;
  rs.algebra = t;
  rs.simple_roots = model_simple_roots(t);
  const int n = t.rank;

  Rational longest = 0;
  for (const auto& r : rs.simple_roots) longest = std::max(longest, linalg::dot(r, r));
  const Rational scale = Rational(2) / longest;
  rs.gram.assign(n, Vector(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram[i][j] = linalg::dot(rs.simple_roots[i], rs.simple_roots[j]) * scale;

  rs.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = 2 * rs.gram[i][j] / rs.gram[j][j];
      if (v.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      rs.cartan[i][j] = static_cast<int>(v.get_num().get_si());
    }

  // Root strings: beta + a_i is a root iff p - <beta, a_i^vee> > 0, where p is
  // the length of the a_i-string below beta. Roots are found in height order.
  std::set<RootVec> known;
  std::vector<RootVec> layer;
  for (int i = 0; i < n; ++i) {
    layer.push_back(simple(n, i));
    known.insert(layer.back());
  }
  while (!layer.empty()) {
    std::set<RootVec> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        RootVec down = beta;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * rs.cartan[j][i];
        if (p - pairing > 0) {
          RootVec up = beta;
          ++up[i];
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
  }
  rs.positive_roots.assign(known.begin(), known.end());
  std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(),
                   [](const RootVec& x, const RootVec& y) { return height(x) < height(y); });
  rs.N = static_cast<long>(rs.positive_roots.size());
  rs.highest_root = rs.positive_roots.back();

  linalg::Matrix a(n, Vector(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = rs.cartan[i][j];
  linalg::Matrix w = linalg::inverse(a);
  rs.fundamental_weights = w;

  rs.rho.assign(n, Rational(0));
  for (const auto& r : rs.positive_roots)
    for (int i = 0; i < n; ++i) rs.rho[i] += r[i];
  for (auto& x : rs.rho) x /= 2;

  rs.invariant_degrees = invariant_degrees(t);
  return rs;
}

const RootSystem& root_system(const AlgebraType& t) {
  static std::mutex mutex;
  static std::map<AlgebraType, RootSystem> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_root_system(t)).first;
  return it->second;
}

bool WeightedDiagram::is_even() const {
  return std::all_of(labels.begin(), labels.end(), [](int l) { return l % 2 == 0; });
}

std::map<int, long> grading_dims(const WeightedDiagram& wd) {
  const RootSystem& rs = root_system(wd.algebra);
  if (static_cast<int>(wd.labels.size()) != rs.rank())
    throw std::invalid_argument("diagram has " + std::to_string(wd.labels.size()) + " labels, " +
                                wd.algebra.name() + " needs " + std::to_string(rs.rank()));
  std::map<int, long> dims;
  dims[0] = rs.rank();
  for (const auto& r : rs.positive_roots) {
    int h = 0;
    for (int i = 0; i < rs.rank(); ++i) h += r[i] * wd.labels[i];
    dims[h] += 1;
    dims[-h] += 1;
  }
  return dims;
}

long orbit_dim_from_diagram(const WeightedDiagram& wd) {
  auto g = grading_dims(wd);
  return dimension(wd.algebra) - g[0] - g[1];
}

DesingDims desing_dims(const WeightedDiagram& wd) {
  DesingDims d;
  for (const auto& [i, dim] : grading_dims(wd)) {
    if (i >= 1) d.base += dim;
    if (i >= 2) d.fiber += dim;
  }
  return d;
}

long dual_coxeter(const RootSystem& rs) {
  const Vector top = to_vector(rs.highest_root);
  Rational h = 1 + 2 * rs.inner(rs.rho, top) / rs.inner(top, top);
  if (h.get_den() != 1) throw std::logic_error("non-integral dual Coxeter number");
  return h.get_num().get_si();
}

WeightedDiagram minimal_orbit_diagram(const RootSystem& rs) {
  const Vector top = to_vector(rs.highest_root);
  const Rational norm = rs.inner(top, top);
  WeightedDiagram wd{rs.algebra, {}};
  for (int i = 0; i < rs.rank(); ++i) {
    Rational v = 2 * rs.inner(to_vector(simple(rs.rank(), i)), top) / norm;
    wd.labels.push_back(static_cast<int>(v.get_num().get_si()));
  }
  return wd;
}

WeightedDiagram sigma1_diagram(const RootSystem& rs) {
  const Vector top = to_vector(rs.highest_root);
  int node = -1;
  for (int i = 0; i < rs.rank(); ++i) {
    Rational c = rs.coroot_pairing(top, i);
    if (c == 0) continue;
    if (c != 1 || node >= 0) {
      node = -2;
      break;
    }
    node = i;
  }
  if (node < 0) throw AdjointNotFundamental("adjoint representation of " + rs.algebra.name() + " is not fundamental");
  WeightedDiagram wd{rs.algebra, std::vector<int>(rs.rank(), 0)};
  const auto adjacent = rs.neighbours();
  for (int j : adjacent[node]) wd.labels[j] = 1;
  return wd;
}

WeightedDiagram series_weight_to_diagram(const std::vector<int>& exponents, const AlgebraType& t,
                                         const WeightTable& table) {
  auto it = table.weights.find(t);
  if (it == table.weights.end()) throw std::invalid_argument("no preferred weights for " + t.name());
  if (exponents.size() != table.names.size())
    throw std::invalid_argument("label has " + std::to_string(exponents.size()) + " exponents, expected " +
                                std::to_string(table.names.size()));
  WeightedDiagram wd{t, std::vector<int>(t.rank, 0)};
  for (std::size_t k = 0; k < exponents.size(); ++k)
    for (int i = 0; i < t.rank; ++i) wd.labels[i] += exponents[k] * it->second[k][i];
  return wd;
}

namespace {

std::string join_nodes(const WeightedDiagram& wd, const char* sep, const char* branch_sep) {
  std::ostringstream out;
  if (wd.algebra.family == Family::E) {
    out << wd.labels[0];
    for (std::size_t i = 2; i < wd.labels.size(); ++i) out << sep << wd.labels[i];
    out << branch_sep << wd.labels[1];
  } else {
    for (std::size_t i = 0; i < wd.labels.size(); ++i) out << (i ? sep : "") << wd.labels[i];
  }
  return out.str();
}

}  // namespace

std::string diagram_string(const WeightedDiagram& wd) { return join_nodes(wd, ",", "/"); }

std::string diagram_layout(const WeightedDiagram& wd) { return join_nodes(wd, " ", " / branch "); }

}  // namespace nilseries::rootsystems
