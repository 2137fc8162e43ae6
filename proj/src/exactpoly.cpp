#include "nilseries/exactpoly.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace nilseries {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

namespace exactpoly {

namespace {

bool quarter_integral(const Rational& r) { return 4 % r.get_den() == 0; }

Rational rational_pow(const Rational& base, long e) {
  Rational result = 1;
  if (e == 0) return result;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
  result = e > 0 ? Rational(num, den) : Rational(den, num);
  result.canonicalize();
  return result;
}

// Exact k-th root of a nonnegative integer, if any.
std::optional<Integer> exact_root(const Integer& x, unsigned long k) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

std::string q_exponent_text(long t_power) {
  Rational e(t_power, 4);
  e.canonicalize();
  if (e == 1) return "q";
  if (e.get_den() == 1) return "q^" + e.get_str();
  return "q^(" + e.get_str() + ")";
}

}  // namespace

LinExp::LinExp(Rational constant, Rational slope) : c0(std::move(constant)), c1(std::move(slope)) {
  c0.canonicalize();
  c1.canonicalize();
  if (!quarter_integral(c0) || !quarter_integral(c1))
    throw ExponentOffLattice("exponent coefficients must be quarter-integers: " + str());
}

std::string LinExp::str() const {
  std::string out;
  if (c1 != 0) {
    Integer n = c1.get_num();
    if (n == -1) out = "-";
    else if (n != 1) out = n.get_str();
    out += "a";
    if (c1.get_den() != 1) out += "/" + c1.get_den().get_str();
  }
  if (c0 != 0 || out.empty()) {
    if (!out.empty() && c0 > 0) out += "+";
    out += c0.get_str();
  }
  return out;
}

QLaurent::QLaurent(int c) : QLaurent(Rational(c)) {}

QLaurent::QLaurent(const Rational& c) : QLaurent(monomial(c, 0)) {}

QLaurent QLaurent::monomial(const Rational& c, long t_power) {
  QLaurent p;
  if (c != 0) {
    Rational v = c;
    v.canonicalize();
    p.terms_.emplace(t_power, std::move(v));
  }
  return p;
}

QLaurent QLaurent::binomial(long t_power, int sign) {
  QLaurent p = monomial(1, t_power);
  return sign > 0 ? p - QLaurent(1) : p + QLaurent(1);
}

QLaurent QLaurent::from_terms(const Terms& terms) {
  QLaurent p;
  for (const auto& [k, c] : terms)
    if (c != 0) p.terms_.emplace(k, c);
  return p;
}

long QLaurent::max_t_power() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

long QLaurent::min_t_power() const {
  if (terms_.empty()) throw std::domain_error("valuation of the zero polynomial");
  return terms_.begin()->first;
}

Rational QLaurent::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Rational QLaurent::coefficient(long t_power) const {
  auto it = terms_.find(t_power);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational QLaurent::degree_in_q() const {
  Rational d(max_t_power(), 4);
  d.canonicalize();
  return d;
}

QLaurent QLaurent::shifted(long t_power) const {
  QLaurent p;
  for (const auto& [k, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), k + t_power, c);
  return p;
}

QLaurent QLaurent::scaled(const Rational& c) const {
  QLaurent p;
  if (c == 0) return p;
  for (const auto& [k, v] : terms_) p.terms_.emplace_hint(p.terms_.end(), k, v * c);
  return p;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent::Terms acc;
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      prod = ca * cb;
      auto [it, inserted] = acc.try_emplace(ka + kb, prod);
      if (!inserted) it->second += prod;
    }
  }
  QLaurent p;
  for (auto& [k, c] : acc)
    if (c != 0) p.terms_.emplace_hint(p.terms_.end(), k, std::move(c));
  return p;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

QLaurent pow(const QLaurent& p, unsigned exponent) {
  QLaurent result(1), base = p;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    first = false;
    if (it->first == 0) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      out << q_exponent_text(it->first);
    }
  }
  return out.str();
}

NotDivisible::NotDivisible(QLaurent remainder)
    : ExactPolyError("not divisible; remainder " + remainder.str()), remainder_(std::move(remainder)) {}

QLaurent exact_div(const QLaurent& n, const QLaurent& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (n.is_zero()) return n;
  // Units t^k are stripped so that ordinary polynomial division decides
  // divisibility in the Laurent ring.
  const long n_low = n.min_t_power();
  const long d_low = d.min_t_power();
  QLaurent::Terms rem = n.shifted(-n_low).terms();
  const QLaurent dn = d.shifted(-d_low);
  const long d_deg = dn.max_t_power();
  const Rational d_lead = dn.leading_coefficient();
  QLaurent::Terms quot;
  Rational c, delta;
  while (!rem.empty() && rem.rbegin()->first >= d_deg) {
    const long k = rem.rbegin()->first - d_deg;
    c = rem.rbegin()->second / d_lead;
    quot.emplace(k, c);
    for (const auto& [e, v] : dn.terms()) {
      delta = c * v;
      auto [it, inserted] = rem.try_emplace(e + k, -delta);
      if (!inserted) {
        it->second -= delta;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  if (!rem.empty()) throw NotDivisible(QLaurent::from_terms(rem).shifted(n_low));
  return QLaurent::from_terms(quot).shifted(n_low - d_low);
}

bool is_polynomial_in_q(const QLaurent& p) {
  for (const auto& [k, c] : p.terms())
    if (k < 0 || k % 4 != 0) return false;
  return true;
}

Rational eval_at(const QLaurent& p, const Rational& q) {
  if (q <= 0) throw std::domain_error("evaluation point must be positive");
  long g = 4;
  for (const auto& [k, c] : p.terms()) g = std::gcd(g, k);
  // Every power is a multiple of g, so one needs q^(g/4) = q^(1/root).
  const long root = 4 / g;
  Rational base = q;
  if (root > 1) {
    auto num = exact_root(q.get_num(), static_cast<unsigned long>(root));
    auto den = exact_root(q.get_den(), static_cast<unsigned long>(root));
    if (!num || !den)
      throw FractionalPowerAtNonFourthPower("q = " + q.get_str() + " has no exact root of order " +
                                            std::to_string(root));
    base = Rational(*num, *den);
    base.canonicalize();
  }
  Rational value = 0;
  for (const auto& [k, c] : p.terms()) value += c * rational_pow(base, k / g);
  return value;
}

const QLaurent& cyclotomic(long d) {
  if (d <= 0) throw std::domain_error("cyclotomic index must be positive");
  static std::recursive_mutex mutex;
  static std::map<long, QLaurent> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  QLaurent phi = QLaurent::binomial(d, 1);
  for (long e = 1; e < d; ++e)
    if (d % e == 0) phi = exact_div(phi, cyclotomic(e));
  return cache.emplace(d, std::move(phi)).first->second;
}

}  // namespace exactpoly
}  // namespace nilseries
