#include <algorithm>
#include <sstream>

#include "nilseries/exactpoly.hpp"

namespace nilseries::exactpoly {

namespace {

// Factor bases ordered so that formal equality can compare merged multisets.
struct BaseKey {
  int kind;  // 0 = Cyclo, 1 = Literal
  Rational c0, c1;
  int sign;
  std::string literal;

  bool operator<(const BaseKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == 0) {
      if (c1 != o.c1) return c1 < o.c1;
      if (c0 != o.c0) return c0 < o.c0;
      return sign < o.sign;
    }
    return literal < o.literal;
  }
  bool operator==(const BaseKey& o) const { return !(*this < o) && !(o < *this); }
};

BaseKey key_of(const Factor& f) {
  if (const auto* c = std::get_if<Cyclo>(&f.base)) return {0, c->exponent.c0, c->exponent.c1, c->sign, {}};
  const auto& lit = std::get<Literal>(f.base);
  std::string text;
  for (const auto& [k, v] : lit.poly.terms()) text += std::to_string(k) + ":" + v.get_str() + ";";
  return {1, 0, 0, 0, text};
}

std::map<BaseKey, int> merged(const std::vector<Factor>& factors) {
  std::map<BaseKey, int> m;
  for (const auto& f : factors) m[key_of(f)] += f.multiplicity;
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

Rational exponent_at(const Cyclo& c, const Rational& a) {
  Rational e = c.exponent.eval(a);
  if (4 % e.get_den() != 0)
    throw ExponentOffLattice("exponent " + c.exponent.str() + " at a=" + a.get_str() +
                             " is not a quarter-integer");
  if (e == 0 && c.sign > 0)
    throw ZeroExponent("factor (q^(" + c.exponent.str() + ")-1) vanishes at a=" + a.get_str());
  return e;
}

long to_t_power(const Rational& e) {
  Rational t = e * 4;
  return t.get_num().get_si();
}

Rational prefactor_at(const ProductExpr& expr, const Rational& a, std::optional<long> n) {
  Rational p = expr.prefactor.eval(a);
  if (expr.roots_coeff != 0) {
    if (!n) throw UnboundPositiveRoots("expression refers to N but no algebra is bound");
    p += Rational(expr.roots_coeff) * Rational(*n);
  }
  if (4 % p.get_den() != 0)
    throw ExponentOffLattice("prefactor exponent at a=" + a.get_str() + " is not a quarter-integer");
  return p;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string factor_text(const Factor& f, int power) {
  std::string base;
  if (const auto* c = std::get_if<Cyclo>(&f.base)) {
    std::string e = c->exponent.str();
    bool simple = c->exponent.is_constant() && c->exponent.c0.get_den() == 1 && c->exponent.c0 > 0;
    if (e == "1") base = "(q";
    else base = simple ? "(q^" + e : "(q^(" + e + ")";
    base += c->sign > 0 ? "-1)" : "+1)";
  } else {
    base = "[" + std::get<Literal>(f.base).poly.str() + "]";
  }
  if (power != 1) base += "^" + std::to_string(power);
  return base;
}

}  // namespace

ProductExpr& ProductExpr::operator*=(const ProductExpr& o) {
  constant *= o.constant;
  prefactor = prefactor + o.prefactor;
  roots_coeff += o.roots_coeff;
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  return *this;
}

ProductExpr ProductExpr::inverse() const {
  if (constant == 0) throw std::domain_error("inverse of a zero expression");
  ProductExpr inv;
  inv.constant = 1 / constant;
  inv.prefactor = -prefactor;
  inv.roots_coeff = -roots_coeff;
  inv.factors = factors;
  for (auto& f : inv.factors) f.multiplicity = -f.multiplicity;
  return inv;
}

bool ProductExpr::operator==(const ProductExpr& o) const {
  return constant == o.constant && prefactor == o.prefactor && roots_coeff == o.roots_coeff &&
         merged(factors) == merged(o.factors);
}

std::string ProductExpr::str() const {
  std::ostringstream num, den;
  auto append = [](std::ostringstream& s, const std::string& piece) {
    if (s.tellp() > 0) s << ' ';
    s << piece;
  };
  if (constant != 1) append(num, "{" + constant.get_str() + "}");
  if (prefactor != LinExp() || roots_coeff != 0) {
    std::string e;
    if (roots_coeff != 0) {
      e = roots_coeff == 1 ? "N" : roots_coeff == -1 ? "-N" : std::to_string(roots_coeff) + "N";
      if (prefactor != LinExp()) {
        std::string rest = prefactor.str();
        e += (rest.front() == '-' ? "" : "+") + rest;
      }
    } else {
      e = prefactor.str();
    }
    bool simple = roots_coeff == 0 && prefactor.is_constant() && prefactor.c0.get_den() == 1 &&
                  prefactor.c0 > 0;
    append(num, simple ? "q^" + e : "q^(" + e + ")");
  }
  for (const auto& f : factors) {
    if (f.multiplicity > 0) append(num, factor_text(f, f.multiplicity));
    else if (f.multiplicity < 0) append(den, factor_text(f, -f.multiplicity));
  }
  std::string out = num.str();
  if (out.empty()) out = "1";
  if (den.tellp() > 0) out += " / " + den.str();
  return out;
}

ProductExpr cyclo_power(const LinExp& e, int sign, int multiplicity) {
  ProductExpr p;
  p.factors.push_back({Cyclo{e, sign}, multiplicity});
  return p;
}

ProductExpr q_power(const LinExp& e) {
  ProductExpr p;
  p.prefactor = e;
  return p;
}

Rational QuotientPair::degree_in_q() const {
  return numerator.degree_in_q() - denominator.degree_in_q();
}

QLaurent QuotientPair::as_laurent() const {
  if (!is_laurent()) throw std::domain_error("quotient is not a Laurent polynomial");
  const auto& [k, c] = *denominator.terms().begin();
  return numerator.shifted(-k).scaled(1 / c);
}

QuotientPair expand(const ProductExpr& expr, const Rational& a, std::optional<long> positive_roots) {
  QuotientPair out;
  out.numerator = QLaurent::monomial(expr.constant, to_t_power(prefactor_at(expr, a, positive_roots)));
  for (const auto& f : expr.factors) {
    QLaurent base;
    if (const auto* c = std::get_if<Cyclo>(&f.base)) {
      base = QLaurent::binomial(to_t_power(exponent_at(*c, a)), c->sign);
    } else {
      base = std::get<Literal>(f.base).poly;
      if (base.is_zero()) throw ZeroExponent("literal factor is zero");
    }
    unsigned m = static_cast<unsigned>(f.multiplicity < 0 ? -f.multiplicity : f.multiplicity);
    if (f.multiplicity > 0) out.numerator *= pow(base, m);
    else out.denominator *= pow(base, m);
  }
  return out;
}

QuotientPair reduce(const ProductExpr& expr, const Rational& a, std::optional<long> positive_roots) {
  Rational constant = expr.constant;
  long shift = to_t_power(prefactor_at(expr, a, positive_roots));
  std::map<long, long> phi;  // cyclotomic index -> exponent (negative: denominator)
  std::vector<QLaurent> num_lits, den_lits;

  for (const auto& f : expr.factors) {
    const long m = f.multiplicity;
    if (const auto* c = std::get_if<Cyclo>(&f.base)) {
      const long k = to_t_power(exponent_at(*c, a));
      const long ak = k < 0 ? -k : k;
      if (c->sign > 0) {
        // t^k - 1 = -t^k (t^|k| - 1) for k < 0.
        if (k < 0) {
          if (m % 2) constant = -constant;
          shift += k * m;
        }
        for (long d : divisors(ak)) phi[d] += m;
      } else if (k == 0) {
        Rational two = m > 0 ? Rational(2) : Rational(1, 2);
        for (long i = 0; i < (m < 0 ? -m : m); ++i) constant *= two;
      } else {
        if (k < 0) shift += k * m;
        for (long d : divisors(2 * ak))
          if (ak % d != 0) phi[d] += m;
      }
    } else {
      auto& side = m > 0 ? num_lits : den_lits;
      for (long i = 0; i < (m < 0 ? -m : m); ++i) side.push_back(std::get<Literal>(f.base).poly);
    }
  }

  auto absorb_literals = [&](std::vector<QLaurent>& lits, int opposite_sign) {
    for (auto& lit : lits) {
      for (auto& [d, e] : phi) {
        while (e * opposite_sign > 0 && lit.term_count() > 1) {
          try {
            lit = exact_div(lit, cyclotomic(d));
          } catch (const NotDivisible&) {
            break;
          }
          e -= opposite_sign;
        }
      }
    }
  };
  absorb_literals(num_lits, -1);
  absorb_literals(den_lits, +1);

  QuotientPair out;
  out.numerator = QLaurent::monomial(constant, shift);
  for (const auto& [d, e] : phi) {
    if (e > 0) out.numerator *= pow(cyclotomic(d), static_cast<unsigned>(e));
    else if (e < 0) out.denominator *= pow(cyclotomic(d), static_cast<unsigned>(-e));
  }
  for (const auto& lit : num_lits) out.numerator *= lit;
  for (const auto& lit : den_lits) out.denominator *= lit;
  if (out.denominator.is_monomial()) out = QuotientPair{out.as_laurent(), QLaurent(1)};
  return out;
}

std::optional<Rational> constant_ratio(const QuotientPair& x, const QuotientPair& y) {
  QLaurent lhs = x.numerator * y.denominator;
  QLaurent rhs = y.numerator * x.denominator;
  if (lhs.is_zero() || rhs.is_zero()) {
    if (lhs.is_zero() && rhs.is_zero()) return Rational(1);
    return std::nullopt;
  }
  Rational c = lhs.leading_coefficient() / rhs.leading_coefficient();
  if (lhs != rhs.scaled(c)) return std::nullopt;
  return c;
}

Rational predicted_degree(const ProductExpr& expr, const Rational& a, std::optional<long> positive_roots) {
  Rational deg = prefactor_at(expr, a, positive_roots);
  for (const auto& f : expr.factors) {
    Rational d;
    if (const auto* c = std::get_if<Cyclo>(&f.base)) {
      Rational e = exponent_at(*c, a);
      d = e > 0 ? e : Rational(0);
    } else {
      d = std::get<Literal>(f.base).poly.degree_in_q();
    }
    deg += d * f.multiplicity;
  }
  return deg;
}

}  // namespace nilseries::exactpoly
