#pragma once

#include <vector>

#include "nilseries/exactpoly.hpp"

namespace nilseries::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

Matrix identity(std::size_t n);
Rational dot(const Vector& x, const Vector& y);
// Rank by exact Gaussian elimination; rows may be sparse-ish, zeros are skipped.
std::size_t rank(Matrix m);
// Inverse of a square matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);
Vector multiply(const Matrix& m, const Vector& x);

}  // namespace nilseries::linalg
