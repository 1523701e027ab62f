#include "weyl/element_io.hpp"

#include <cctype>
#include <sstream>

#include "weyl/error.hpp"

namespace weyl {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  WeylElement parseAll() {
    WeylElement e = expr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  std::vector<WeylElement> parseList() {
    std::vector<WeylElement> out;
    skipSpace();
    if (pos_ == text_.size()) return out;
    out.push_back(expr());
    skipSpace();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(expr());
      skipSpace();
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool atFactorStart() {
    skipSpace();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'd' || c == 'E' ||
           c == '(';
  }

  mpz_class integer() {
    skipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned smallInteger() {
    const std::size_t at = pos_;
    mpz_class v = integer();
    if (v > 1000000) {
      pos_ = at;
      fail("exponent too large");
    }
    return static_cast<unsigned>(v.get_ui());
  }

  unsigned optionalExponent() {
    if (peek('^')) {
      ++pos_;
      return smallInteger();
    }
    return 1;
  }

  std::size_t variableIndex() {
    const std::size_t at = pos_;
    mpz_class v = integer();
    if (v < 1 || v > n_) {
      pos_ = at;
      fail("unknown variable index " + v.get_str() + " (ambient n = " + std::to_string(n_) + ")");
    }
    return static_cast<std::size_t>(v.get_ui()) - 1;
  }

  WeylElement factor() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return WeylElement::constant(n_, q);
    }
    if (c == 'x' || c == 'd') {
      ++pos_;
      const std::size_t i = variableIndex();
      const unsigned e = optionalExponent();
      Monomial m = Monomial::one(n_);
      (c == 'x' ? m.x : m.d)[i] = e;
      return WeylElement::monomial(m);
    }
    if (c == 'E') {
      ++pos_;
      return power(WeylElement::euler(n_), optionalExponent());
    }
    if (c == '(') {
      ++pos_;
      WeylElement inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return power(inner, optionalExponent());
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  WeylElement term() {
    WeylElement t = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        t = t * factor();
      } else if (atFactorStart()) {
        t = t * factor();
      } else {
        break;
      }
    }
    return t;
  }

  WeylElement expr() {
    WeylElement result(n_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    WeylElement t = term();
    result += negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        result += term();
      } else if (peek('-')) {
        ++pos_;
        result -= term();
      } else {
        break;
      }
    }
    return result;
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylElement parseElement(std::string_view text, std::size_t n) {
  if (n == 0) throw Error("ambient n must be positive");
  return Parser(text, n).parseAll();
}

std::vector<WeylElement> parseElementList(std::string_view text, std::size_t n) {
  if (n == 0) throw Error("ambient n must be positive");
  return Parser(text, n).parseList();
}

std::string toString(const Rational& q) { return q.get_str(); }

std::string toString(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char var, std::size_t i, unsigned e) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << var << (i + 1);
    if (e != 1) os << '^' << e;
  };
  for (std::size_t i = 0; i < m.n(); ++i) emit('x', i, m.x[i]);
  for (std::size_t i = 0; i < m.n(); ++i) emit('d', i, m.d[i]);
  if (first) return "1";
  return os.str();
}

std::string toString(const WeylElement& e) {
  if (e.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = m.totalExponent() == 0;
    if (unit) {
      os << c.get_str();
    } else if (c == 1) {
      os << toString(m);
    } else {
      os << c.get_str() << '*' << toString(m);
    }
  }
  return os.str();
}

}  // namespace weyl
