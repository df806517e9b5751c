#include "galmod/algebra/text_format.hpp"

#include <cctype>

#include "galmod/error.hpp"

namespace galmod {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExtField& field) : s_(text), field_(field) {}

  RatFn ratfn() {
    Poly num = sum();
    skip_space();
    if (peek() == '/') {
      ++pos_;
      Poly den = sum();
      if (den.is_zero()) fail("zero denominator");
      finish();
      return RatFn(std::move(num), std::move(den));
    }
    finish();
    return RatFn(std::move(num));
  }

  Poly poly() {
    Poly p = sum();
    finish();
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" +
                                           std::string(s_) + "\"");
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void finish() {
    skip_space();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
  }

  Poly sum() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      base = base.pow(integer());
    }
    return base;
  }

  std::uint64_t integer() {
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (pos_ - start > 18) fail("integer literal too long");
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  Poly primary() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      return Poly::constant(field_.from_int(static_cast<std::int64_t>(v % field_.characteristic())));
    }
    if (c == 't') {
      ++pos_;
      return Poly::t(field_);
    }
    if (c == 'g') {
      ++pos_;
      return Poly::constant(field_.generator());
    }
    if (c == '(') {
      ++pos_;
      Poly inner = sum();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const ExtField& field_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFn parse_ratfn(std::string_view text, const ExtField& field) { return Parser(text, field).ratfn(); }

Poly parse_poly(std::string_view text, const ExtField& field) { return Parser(text, field).poly(); }

ExtFieldElement parse_field_element(std::string_view text, const ExtField& field) {
  const Poly p = parse_poly(text, field);
  if (p.degree() > 0) throw Error(ErrorKind::ParseError, "\"" + std::string(text) + "\" depends on t");
  return p.coeff(0);
}

}  // namespace galmod
