#include <cctype>
#include <string>

#include "amcurve/poly.hpp"

namespace amcurve {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

constexpr std::uint64_t kMaxExponent = 1'000'000;

// Recursive-descent parser. `Poly` is UniPoly or BiPoly; `make_variable`
// maps a variable letter to a polynomial or returns false if not admissible.
template <class Poly, class VariableFn>
class Parser {
 public:
  Parser(std::string_view text, const CoeffDomain& domain, VariableFn make_variable)
      : text_(text), domain_(domain), make_variable_(std::move(make_variable)) {}

  Poly parse() {
    Poly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
    }
    const char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
      fail("missing '*' between factors");
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a nonnegative integer");
      }
      const Integer e = digits();
      if (e > kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(e.get_ui());
      if (peek() == '^') fail("chained exponent needs parentheses");
    }
    return base;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
        fail("coefficient must be an integer or rational literal");
      }
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("rational literal needs an integer denominator");
        }
        Integer den = digits();
        if (den == 0) {
          pos_ = start;
          fail("zero denominator");
        }
        try {
          return Poly::constant(Scalar::from_rational(Rational(num, den), domain_));
        } catch (const DivisionByZero&) {
          pos_ = start;
          fail("denominator not invertible in " + domain_.name());
        }
      }
      return Poly::constant(Scalar::from_integer(num, domain_));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      Poly v(domain_);
      if (!make_variable_(c, v)) {
        pos_ = start;
        fail(std::string("unknown variable '") + c + "'");
      }
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        fail("missing '*' between factors");
      }
      return v;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  CoeffDomain domain_;
  VariableFn make_variable_;
  std::size_t pos_ = 0;
};

template <class Poly, class VariableFn>
Poly run_parser(std::string_view text, const CoeffDomain& domain, VariableFn fn) {
  return Parser<Poly, VariableFn>(text, domain, std::move(fn)).parse();
}

}  // namespace

BiPoly parse_bipoly(std::string_view text, const CoeffDomain& domain) {
  return run_parser<BiPoly>(text, domain, [&domain](char c, BiPoly& out) {
    if (c == 'x') {
      out = BiPoly::x(domain);
    } else if (c == 'y') {
      out = BiPoly::y(domain);
    } else {
      return false;
    }
    return true;
  });
}

UniPoly parse_unipoly(std::string_view text, const CoeffDomain& domain, char variable) {
  return run_parser<UniPoly>(text, domain, [&domain, variable](char c, UniPoly& out) {
    if (c != variable) return false;
    out = UniPoly::variable(domain);
    return true;
  });
}

}  // namespace amcurve
