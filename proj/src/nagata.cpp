#include <numeric>

#include "amcurve/chain.hpp"

namespace amcurve {

bool NagataRecord::matches_expectation() const {
  return f_vanishes && g_is_t && computed == expected && axioms.gcd_descent && axioms.weighted_growth &&
         !axioms.am_inequality && axioms.conductor;
}

NagataRecord nagata(std::uint64_t p, std::uint64_t a) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (a <= 1) throw std::invalid_argument("a must exceed 1");
  if (std::gcd(a, p) != 1) throw std::invalid_argument("a must be coprime to p");

  const CoeffDomain dom = CoeffDomain::prime_field(p);
  const Scalar one = Scalar::one(dom);
  const BiPoly x = BiPoly::x(dom);
  const BiPoly y = BiPoly::y(dom);

  NagataRecord rec;
  rec.p = p;
  rec.a = a;
  rec.which = a < p ? NagataCase::kI : NagataCase::kII;

  const BiPoly inner = y.pow(p) - x.pow(a);
  rec.f = inner.pow(p) - x;
  rec.g = y - inner.pow(a);
  rec.param.x = UniPoly::monomial(one, p * p);
  rec.param.y = UniPoly::variable(dom) + UniPoly::monomial(one, a * p);

  rec.f_vanishes = substitute(rec.f, rec.param.x, rec.param.y).is_zero();
  rec.g_is_t = substitute(rec.g, rec.param.x, rec.param.y) == UniPoly::variable(dom);

  const Integer P(static_cast<unsigned long>(p));
  const Integer A(static_cast<unsigned long>(a));
  if (rec.which == NagataCase::kI) {
    rec.expected = {P * P, P * (P - A), P * P * P + P * (A - 1) - 1};
  } else {
    rec.expected = {A * P, P * (A - P), A * A * P + P * (A - 1) - 1};
  }

  // r_0 = deg f. The leading form is a pure power of x or y; the other
  // coordinate axis passes through the point at infinity, and its
  // intersection number is r_1.
  const std::int64_t n = rec.f.degree().value();
  const BiPoly lf = rec.f.leading_form();
  if (lf.terms().size() != 1) throw ChainError("leading form of f is not a pure power");
  const Monomial top = lf.terms().begin()->first;
  const BiPoly through_point = top.y == 0 ? x : y;
  const auto r1 = bezout_intersection(through_point, n, rec.param);
  if (r1.is_infinite()) throw ChainError("coordinate axis is a component of the Nagata curve");

  // (r_0/d_2 - 1) r_1 + (d_2 - 1) r_2 = (r_0 - 1)^2 with d_3 = 1.
  const Integer r0(static_cast<long>(n));
  const Integer r1v(static_cast<long>(r1.value()));
  const Integer d2 = gcd(r0, r1v);
  if (d2 <= 1) throw ChainError("gcd(r_0, r_1) = 1; no third term");
  const Integer numerator = (r0 - 1) * (r0 - 1) - (r0 / d2 - 1) * r1v;
  if (numerator % (d2 - 1) != 0) throw ChainError("conductor formula has no integral solution for r_2");
  rec.computed = {r0, r1v, numerator / (d2 - 1)};
  rec.axioms = check_axioms(CharSequence(rec.computed));
  return rec;
}

}  // namespace amcurve
