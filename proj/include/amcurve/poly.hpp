#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "amcurve/numeric.hpp"

namespace amcurve {

/// Polynomial degree; the zero polynomial has degree -infinity, ordered
/// below every integer.
class Degree {
 public:
  constexpr Degree(std::int64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr Degree neg_infinity() { return Degree(kNegInf, 0); }

  constexpr bool is_neg_infinity() const { return value_ == kNegInf; }
  std::int64_t value() const;

  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;

  /// -inf absorbs.
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }

  std::string to_string() const;

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  constexpr Degree(std::int64_t value, int /*tag*/) : value_(value) {}
  std::int64_t value_;
};

/// Sparse polynomial in one variable t.
class UniPoly {
 public:
  using Terms = std::map<std::uint64_t, Scalar>;

  explicit UniPoly(CoeffDomain domain = CoeffDomain::rational()) : domain_(domain) {}

  static UniPoly constant(const Scalar& c);
  static UniPoly monomial(const Scalar& c, std::uint64_t exponent);
  /// The polynomial t.
  static UniPoly variable(const CoeffDomain& domain);

  const CoeffDomain& domain() const { return domain_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Degree degree() const;
  Scalar coefficient(std::uint64_t exponent) const;
  Scalar leading_coefficient() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Scalar& rhs);
  UniPoly& operator+=(const Scalar& rhs);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Scalar& b) { return a *= b; }
  friend UniPoly operator*(const Scalar& b, UniPoly a) { return a *= b; }
  friend UniPoly operator+(UniPoly a, const Scalar& b) { return a += b; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly pow(std::uint64_t exponent) const;

  /// Terms by descending degree, e.g. "t^6 + t" or "-y^2 + 3".
  std::string to_string(char variable = 't') const;

 private:
  void add_term(std::uint64_t exponent, const Scalar& c);
  void require_domain(const CoeffDomain& other) const;

  CoeffDomain domain_;
  Terms terms_;
};

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  std::uint64_t total() const { return std::uint64_t{x} + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic with x > y, ascending.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.x < b.x;
  }
};

/// Sparse polynomial in x, y.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexLess>;

  explicit BiPoly(CoeffDomain domain = CoeffDomain::rational()) : domain_(domain) {}

  static BiPoly constant(const Scalar& c);
  static BiPoly monomial(const Scalar& c, std::uint32_t x_exp, std::uint32_t y_exp);
  static BiPoly x(const CoeffDomain& domain);
  static BiPoly y(const CoeffDomain& domain);

  const CoeffDomain& domain() const { return domain_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree.
  Degree degree() const;
  Scalar coefficient(Monomial m) const;

  /// Homogeneous part of top total degree. Throws std::invalid_argument on zero.
  BiPoly leading_form() const;

  BiPoly derivative_x() const;
  BiPoly derivative_y() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const Scalar& rhs);
  BiPoly& operator+=(const Scalar& rhs);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Scalar& b) { return a *= b; }
  friend BiPoly operator*(const Scalar& b, BiPoly a) { return a *= b; }
  friend BiPoly operator+(BiPoly a, const Scalar& b) { return a += b; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly pow(std::uint64_t exponent) const;

  /// Graded lexicographic order (x > y), highest first: "y^4 - 2*x*y^2 + x^2 - y".
  std::string to_string() const;

 private:
  void add_term(Monomial m, const Scalar& c);
  void require_domain(const CoeffDomain& other) const;

  CoeffDomain domain_;
  Terms terms_;
};

// Evaluation and substitution. All arguments must share one coefficient domain.

Scalar evaluate(const UniPoly& p, const Scalar& at);
/// p(q(t)).
UniPoly evaluate(const UniPoly& p, const UniPoly& at);
/// p(F(x, y)).
BiPoly evaluate(const UniPoly& p, const BiPoly& at);
Scalar evaluate(const BiPoly& h, const Scalar& x, const Scalar& y);

/// h(x(t), y(t)).
UniPoly substitute(const BiPoly& h, const UniPoly& xt, const UniPoly& yt);
/// h(X(x, y), Y(x, y)).
BiPoly substitute(const BiPoly& h, const BiPoly& x_image, const BiPoly& y_image);

/// Syntax error in polynomial text; `position()` is a 0-based byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the polynomial grammar over the variables x and y:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nonneg-int)?
///   atom   := int | int '/' int | 'x' | 'y' | 't' | '(' expr ')'
///
/// Whitespace is ignored. Juxtaposition ("2x") is a syntax error.
BiPoly parse_bipoly(std::string_view text, const CoeffDomain& domain);

/// Same grammar, with `variable` as the only admissible variable.
UniPoly parse_unipoly(std::string_view text, const CoeffDomain& domain, char variable = 't');

}  // namespace amcurve
