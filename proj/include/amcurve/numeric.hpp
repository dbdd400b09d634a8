#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace amcurve {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when two values from different coefficient domains meet.
class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on division by zero in any coefficient domain.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// gcd over nonnegative integers, gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

bool is_prime(std::uint64_t n);

/// Coefficient domain: the rationals, or the prime field F_p.
///
/// Primes are limited to p < 2^32 so that residue products fit in 64 bits.
class CoeffDomain {
 public:
  CoeffDomain() = default;

  static CoeffDomain rational() { return CoeffDomain{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  static CoeffDomain prime_field(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  std::string name() const;

  friend bool operator==(const CoeffDomain&, const CoeffDomain&) = default;

 private:
  friend class Scalar;
  explicit CoeffDomain(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact coefficient: a rational in lowest terms or a residue in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(Rational(0)) {}

  static Scalar zero(const CoeffDomain& domain);
  static Scalar one(const CoeffDomain& domain);
  static Scalar from_integer(const Integer& value, const CoeffDomain& domain);
  static Scalar from_int(long value, const CoeffDomain& domain) {
    return from_integer(Integer(value), domain);
  }
  /// Over F_p the denominator must be invertible.
  static Scalar from_rational(const Rational& value, const CoeffDomain& domain);

  CoeffDomain domain() const;

  bool is_zero() const;
  bool is_one() const;

  /// Valid only over the rationals.
  const Rational& rational() const;
  /// Valid only over a prime field.
  std::uint64_t residue() const;

  /// Sign used for printing: over F_p every nonzero residue counts as positive.
  int sign() const;
  /// |value| over Q, identity over F_p.
  Scalar magnitude() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Decimal text: "a", "-a" or "a/b" over Q; the residue over F_p.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(Rational q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  void require_same_domain(const Scalar& rhs) const;

  std::variant<Rational, Residue> value_;
};

}  // namespace amcurve
