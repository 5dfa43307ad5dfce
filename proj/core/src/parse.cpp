#include "wblow/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace wblow {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const GradedRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial out = ring_.zero();
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
    }
    out += term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      get();
      out += term(c == '-');
    }
    return out;
  }

 private:
  Polynomial term(bool negative) {
    skip_ws();
    Rational coeff = 1;
    Exponents e(ring_.arity(), 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      need_factor = false;
    }
    if (need_factor) factor(e);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      factor(e);
    }
    if (negative) coeff = -coeff;
    Polynomial p(ring_.arity());
    p.add_term(e, coeff);
    return p;
  }

  Rational coefficient() {
    Integer num = integer();
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      const std::size_t at = pos_;
      Integer den = integer();
      if (den == 0) fail_at("zero denominator", at);
      return make_rational(num, den);
    }
    return Rational(num);
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void factor(Exponents& e) {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected variable");
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    auto idx = ring_.index_of(name);
    if (!idx) fail_at("unknown variable '" + std::string(name) + "'", start);
    int power = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      const std::size_t at = pos_;
      const std::size_t digits_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (digits_start == pos_ || (!at_end() && (peek() == '.' || peek() == '/'))) {
        fail_at("non-integer exponent", at);
      }
      const std::string digits(text_.substr(digits_start, pos_ - digits_start));
      if (digits.size() > 6) fail_at("exponent too large", at);
      power = std::stoi(digits);
    }
    e[*idx] += power;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  std::string_view text_;
  const GradedRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const GradedRing& ring) {
  return Parser(text, ring).parse();
}

std::string print_polynomial(const Polynomial& p, const GradedRing& ring) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1) {
      os << to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << ring.variables()[i].name;
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
    if (!wrote) os << '1';
  }
  return os.str();
}

}  // namespace wblow
