#include <cctype>

#include "nilseries/exactpoly.hpp"

namespace nilseries::exactpoly {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string_view until(char close) {
    skip_space();
    std::size_t end = text_.find(close, pos_);
    if (end == std::string_view::npos) fail(std::string("missing '") + close + "'");
    std::string_view inner = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    return inner;
  }
  long integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return negative ? -v : v;
  }
  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '.'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct ExponentWithRoots {
  LinExp e;
  int roots = 0;
};

// Terms like "N-6a-9", "3a/2+2", "a/4-1", "-2".
ExponentWithRoots parse_exponent_body(std::string_view text) {
  ExponentWithRoots out;
  Rational c0 = 0, c1 = 0;
  std::size_t i = 0;
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string(what) + " in exponent \"" + std::string(text) + "\"");
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size()) fail("empty exponent");
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    Integer num = 1;
    bool has_number = false;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      num = Integer(std::string(text.substr(start, i - start)));
      has_number = true;
    }
    char symbol = 0;
    if (i < text.size() && (text[i] == 'a' || text[i] == 'N')) symbol = text[i++];
    if (!has_number && !symbol) fail("expected a term");
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
      ++i;
      start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) fail("expected a denominator");
      den = Integer(std::string(text.substr(start, i - start)));
    }
    Rational coeff(num * sign, den);
    coeff.canonicalize();
    if (symbol == 'a') c1 += coeff;
    else if (symbol == 'N') {
      if (coeff.get_den() != 1) fail("N must have an integer coefficient");
      out.roots += static_cast<int>(coeff.get_num().get_si());
    } else c0 += coeff;
    skip();
    if (i < text.size() && text[i] != '+' && text[i] != '-') fail("unexpected character");
  }
  out.e = LinExp(c0, c1);
  return out;
}

ExponentWithRoots parse_exponent(Cursor& cur) {
  if (cur.accept('(')) return parse_exponent_body(cur.until(')'));
  ExponentWithRoots out;
  if (cur.accept('a')) {
    out.e = LinExp(0, 1);
    return out;
  }
  out.e = LinExp(Rational(cur.integer()));
  return out;
}

int parse_power(Cursor& cur) {
  if (!cur.accept('^')) return 1;
  long p = cur.integer();
  if (p <= 0) cur.fail("factor powers must be positive");
  return static_cast<int>(p);
}

ProductExpr parse_side(Cursor& cur, const std::map<std::string, ProductExpr, std::less<>>* names,
                       bool stop_at_slash) {
  ProductExpr side;
  while (!cur.done()) {
    char c = cur.peek();
    if (c == '/' && stop_at_slash) break;
    if (cur.accept('{')) {
      side.constant *= parse_rational(cur.until('}'));
    } else if (c == '1') {
      // "1" placeholder for an empty numerator.
      if (cur.integer() != 1) cur.fail("only 1 may stand alone");
    } else if (cur.accept('q')) {
      ExponentWithRoots e{LinExp(1), 0};
      if (cur.accept('^')) e = parse_exponent(cur);
      side.prefactor = side.prefactor + e.e;
      side.roots_coeff += e.roots;
    } else if (cur.accept('(')) {
      cur.expect('q');
      ExponentWithRoots e{LinExp(1), 0};
      if (cur.accept('^')) e = parse_exponent(cur);
      if (e.roots != 0) cur.fail("N is only allowed in the q-power prefactor");
      int sign;
      if (cur.accept('-')) sign = 1;
      else if (cur.accept('+')) sign = -1;
      else cur.fail("expected -1 or +1");
      if (cur.integer() != 1) cur.fail("expected 1");
      cur.expect(')');
      side.factors.push_back({Cyclo{e.e, sign}, parse_power(cur)});
    } else if (cur.accept('[')) {
      QLaurent lit = parse_qpoly(cur.until(']'));
      side.factors.push_back({Literal{lit}, parse_power(cur)});
    } else if (cur.accept('@')) {
      std::string name = cur.identifier();
      if (!names) cur.fail("no named expressions available for @" + name);
      auto it = names->find(name);
      if (it == names->end()) cur.fail("unknown expression @" + name);
      int p = parse_power(cur);
      for (int i = 0; i < p; ++i) side *= it->second;
    } else if (cur.accept('*')) {
      // optional separator
    } else {
      cur.fail("unexpected character");
    }
  }
  return side;
}

ProductExpr parse_impl(std::string_view text, const std::map<std::string, ProductExpr, std::less<>>* names) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty expression");
  ProductExpr expr = parse_side(cur, names, true);
  if (cur.accept('/')) expr *= parse_side(cur, names, false).inverse();
  if (!cur.done()) cur.fail("trailing input");
  return expr;
}

}  // namespace

ProductExpr parse_product(std::string_view text) { return parse_impl(text, nullptr); }

ProductExpr parse_product(std::string_view text,
                          const std::map<std::string, ProductExpr, std::less<>>& names) {
  return parse_impl(text, &names);
}

LinExp parse_linexp(std::string_view text) {
  auto e = parse_exponent_body(text);
  if (e.roots != 0) throw std::invalid_argument("N not allowed here: " + std::string(text));
  return e.e;
}

// Sums of terms "c", "c*q^e", "q^(r)", "-q"; exponents integers or "(p/q)"
// with denominator dividing 4.
QLaurent parse_qpoly(std::string_view text) {
  QLaurent out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string(what) + " in polynomial \"" + std::string(text) + "\"");
  };
  skip();
  if (i >= text.size()) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Rational coeff = 1;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    bool has_coeff = i > start;
    if (has_coeff) coeff = parse_rational(text.substr(start, i - start));
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    long t_power = 0;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      Rational e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i < text.size() && text[i] == '(') {
          std::size_t close = text.find(')', i);
          if (close == std::string_view::npos) fail("missing )");
          e = parse_rational(text.substr(i + 1, close - i - 1));
          i = close + 1;
        } else {
          start = i;
          if (i < text.size() && text[i] == '-') ++i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (i == start) fail("expected exponent");
          e = parse_rational(text.substr(start, i - start));
        }
      }
      Rational t = e * 4;
      if (t.get_den() != 1) fail("exponent off the quarter lattice");
      t_power = t.get_num().get_si();
    } else if (!has_coeff) {
      fail("expected a term");
    }
    out += QLaurent::monomial(coeff * sign, t_power);
  }
  return out;
}

}  // namespace nilseries::exactpoly
