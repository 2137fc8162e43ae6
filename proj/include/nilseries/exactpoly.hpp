#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nilseries {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

namespace exactpoly {

// Affine function c0 + c1*a of the series parameter. Both coefficients are
// quarter-integers.
struct LinExp {
  Rational c0;
  Rational c1;

  LinExp() = default;
  LinExp(Rational constant, Rational slope = 0);

  Rational eval(const Rational& a) const { return c0 + c1 * a; }
  bool is_constant() const { return c1 == 0; }
  std::string str() const;

  LinExp operator+(const LinExp& o) const { return {c0 + o.c0, c1 + o.c1}; }
  LinExp operator-(const LinExp& o) const { return {c0 - o.c0, c1 - o.c1}; }
  LinExp operator-() const { return {-c0, -c1}; }
  LinExp scaled(const Rational& k) const { return {c0 * k, c1 * k}; }
  bool operator==(const LinExp& o) const { return c0 == o.c0 && c1 == o.c1; }
};

// Laurent polynomial in t = q^(1/4) with rational coefficients.
class QLaurent {
 public:
  using Terms = std::map<long, Rational>;

  QLaurent() = default;
  QLaurent(int c);  // NOLINT: constants convert implicitly
  QLaurent(const Rational& c);  // NOLINT

  static QLaurent monomial(const Rational& c, long t_power);
  // t^k - 1 (sign = +1) or t^k + 1 (sign = -1).
  static QLaurent binomial(long t_power, int sign);
  static QLaurent from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  // Both throw std::domain_error on the zero polynomial.
  long max_t_power() const;
  long min_t_power() const;
  Rational leading_coefficient() const;
  Rational coefficient(long t_power) const;
  Rational degree_in_q() const;

  QLaurent shifted(long t_power) const;
  QLaurent scaled(const Rational& c) const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent operator-() const { return scaled(-1); }
  bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const QLaurent& o) const { return !(*this == o); }

  // Human readable, in q: "q^2 + 1", "q^(1/2) - 1".
  std::string str() const;

 private:
  Terms terms_;
};

QLaurent pow(const QLaurent& p, unsigned exponent);

class ExactPolyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroExponent : public ExactPolyError {
 public:
  using ExactPolyError::ExactPolyError;
};

class ExponentOffLattice : public ExactPolyError {
 public:
  using ExactPolyError::ExactPolyError;
};

class NotDivisible : public ExactPolyError {
 public:
  explicit NotDivisible(QLaurent remainder);
  const QLaurent& remainder() const { return remainder_; }

 private:
  QLaurent remainder_;
};

class FractionalPowerAtNonFourthPower : public ExactPolyError {
 public:
  using ExactPolyError::ExactPolyError;
};

// Quotient iff d divides n in Q[t, 1/t]; NotDivisible otherwise.
QLaurent exact_div(const QLaurent& n, const QLaurent& d);
bool is_polynomial_in_q(const QLaurent& p);
Rational eval_at(const QLaurent& p, const Rational& q);

// Phi_d(t), cached.
const QLaurent& cyclotomic(long d);

// (q^e - 1) for sign +1, (q^e + 1) for sign -1.
struct Cyclo {
  LinExp exponent;
  int sign = 1;
  bool operator==(const Cyclo& o) const { return exponent == o.exponent && sign == o.sign; }
};

struct Literal {
  QLaurent poly;
  bool operator==(const Literal& o) const { return poly == o.poly; }
};

struct Factor {
  std::variant<Cyclo, Literal> base;
  int multiplicity = 1;
  bool operator==(const Factor& o) const { return base == o.base && multiplicity == o.multiplicity; }
};

// constant * q^(prefactor + roots_coeff*N) * prod factor^multiplicity, where N
// is the number of positive roots of the ambient algebra, bound at expansion.
struct ProductExpr {
  Rational constant{1};
  LinExp prefactor;
  int roots_coeff = 0;
  std::vector<Factor> factors;

  ProductExpr& operator*=(const ProductExpr& o);
  friend ProductExpr operator*(ProductExpr a, const ProductExpr& b) { return a *= b; }
  ProductExpr inverse() const;
  friend ProductExpr operator/(ProductExpr a, const ProductExpr& b) { return a *= b.inverse(); }
  bool operator==(const ProductExpr& o) const;

  bool uses_positive_roots() const { return roots_coeff != 0; }
  // Canonical text; parse_product(str()) == *this.
  std::string str() const;
};

ProductExpr cyclo_power(const LinExp& e, int sign = 1, int multiplicity = 1);
ProductExpr q_power(const LinExp& e);

struct QuotientPair {
  QLaurent numerator;
  QLaurent denominator{1};

  Rational degree_in_q() const;
  bool is_laurent() const { return denominator.is_monomial(); }
  // numerator/denominator as one Laurent polynomial; requires is_laurent().
  QLaurent as_laurent() const;
  bool operator==(const QuotientPair& o) const {
    return numerator == o.numerator && denominator == o.denominator;
  }
};

// Throws when N is needed but not supplied.
class UnboundPositiveRoots : public ExactPolyError {
 public:
  using ExactPolyError::ExactPolyError;
};

QuotientPair expand(const ProductExpr& expr, const Rational& a,
                    std::optional<long> positive_roots = std::nullopt);

// Expansion with common factors cancelled. Cancellation runs over the
// cyclotomic components of the binomial factors, so the result is coprime
// whenever the expression has no Literal factors; Literal factors are divided
// by matching components on the opposite side. A unit denominator is folded
// into the numerator.
QuotientPair reduce(const ProductExpr& expr, const Rational& a,
                    std::optional<long> positive_roots = std::nullopt);

// Value c with x == c*y as rational functions, if one exists.
std::optional<Rational> constant_ratio(const QuotientPair& x, const QuotientPair& y);

// Sum of multiplicity*exponent over all factors plus the prefactor, i.e. the
// q-degree predicted without expanding.
Rational predicted_degree(const ProductExpr& expr, const Rational& a,
                          std::optional<long> positive_roots = std::nullopt);

// Text form, e.g. "{1/2} q^(N-6a-9) (q^(a+1)-1)(q^(3a/2)+1)^2 / (q-1) [q^2-q+1]".
// "@name" splices a previously defined expression from `names`.
ProductExpr parse_product(std::string_view text);
ProductExpr parse_product(std::string_view text,
                          const std::map<std::string, ProductExpr, std::less<>>& names);
LinExp parse_linexp(std::string_view text);
QLaurent parse_qpoly(std::string_view text);

}  // namespace exactpoly
}  // namespace nilseries
