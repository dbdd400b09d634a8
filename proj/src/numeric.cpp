#include "amcurve/numeric.hpp"


namespace amcurve {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_mod(const Integer& value, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

CoeffDomain CoeffDomain::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is too large (limit 2^32)");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  }
  return CoeffDomain(p);
}

std::string CoeffDomain::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const CoeffDomain& domain) { return from_int(0, domain); }

Scalar Scalar::one(const CoeffDomain& domain) { return from_int(1, domain); }

Scalar Scalar::from_integer(const Integer& value, const CoeffDomain& domain) {
  if (domain.is_rational()) return Scalar(Rational(value));
  const auto p = domain.characteristic();
  return Scalar(Residue{reduce_mod(value, p), p});
}

Scalar Scalar::from_rational(const Rational& raw, const CoeffDomain& domain) {
  // mpq_class(a, b) is not normalized; 3/6 must behave like 1/2.
  if (raw.get_den() == 0) throw DivisionByZero("zero denominator");
  Rational value = raw;
  value.canonicalize();
  if (domain.is_rational()) return Scalar(value);
  const auto p = domain.characteristic();
  const auto den = reduce_mod(value.get_den(), p);
  if (den == 0) {
    throw DivisionByZero("denominator of " + value.get_str() + " vanishes in " + domain.name());
  }
  const auto num = reduce_mod(value.get_num(), p);
  return Scalar(Residue{num * mod_pow(den, p - 2, p) % p, p});
}

CoeffDomain Scalar::domain() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return CoeffDomain(r->p);
  return CoeffDomain::rational();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<Rational>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<Rational>(value_) == 1;
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw DomainMismatch("scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw DomainMismatch("scalar is not a prime-field residue");
}

int Scalar::sign() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0 ? 0 : 1;
  return sgn(std::get<Rational>(value_));
}

Scalar Scalar::magnitude() const {
  if (sign() < 0) return -*this;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{mod_pow(r->value, r->p - 2, r->p), r->p});
  }
  return Scalar(Rational(1) / std::get<Rational>(value_));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  }
  return Scalar(Rational(-std::get<Rational>(value_)));
}

void Scalar::require_same_domain(const Scalar& rhs) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&rhs.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p)) {
    throw DomainMismatch("coefficient domains differ: " + domain().name() + " vs " +
                         rhs.domain().name());
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_domain(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(rhs.value_).value) % r->p;
  } else {
    std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_domain(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = r->value * std::get<Residue>(rhs.value_).value % r->p;
  } else {
    std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_domain(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<Rational>(value_).get_str();
}

}  // namespace amcurve
