#include "nilseries/linalg.hpp"

#include <stdexcept>

namespace nilseries::linalg {

Matrix identity(std::size_t n) {
  Matrix m(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Rational dot(const Vector& x, const Vector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
  return s;
}

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m, inv = identity(n);
  Rational factor;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    std::swap(a[pivot], a[c]);
    std::swap(inv[pivot], inv[c]);
    factor = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= factor;
      inv[c][j] /= factor;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      factor = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[c][j];
        inv[i][j] -= factor * inv[c][j];
      }
    }
  }
  return inv;
}

Vector multiply(const Matrix& m, const Vector& x) {
  Vector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], x);
  return out;
}

}  // namespace nilseries::linalg
