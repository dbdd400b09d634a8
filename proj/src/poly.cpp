#include "amcurve/poly.hpp"

#include <vector>

namespace amcurve {

std::int64_t Degree::value() const {
  if (is_neg_infinity()) throw std::logic_error("degree of the zero polynomial is -infinity");
  return value_;
}

std::string Degree::to_string() const {
  return is_neg_infinity() ? "-inf" : std::to_string(value_);
}

namespace {

// Appends "c*m", "-m", "+ c" style term text, sign-aware.
void append_term(std::string& out, const Scalar& c, const std::string& monomial) {
  const bool negative = c.sign() < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Scalar mag = c.magnitude();
  if (monomial.empty()) {
    out += mag.to_string();
  } else if (mag.is_one()) {
    out += monomial;
  } else {
    out += mag.to_string() + "*" + monomial;
  }
}

std::string power_text(char var, std::uint64_t e) {
  if (e == 0) return "";
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

Scalar lift(const Scalar& c, const Scalar& /*like*/) { return c; }
UniPoly lift(const Scalar& c, const UniPoly& /*like*/) { return UniPoly::constant(c); }
BiPoly lift(const Scalar& c, const BiPoly& /*like*/) { return BiPoly::constant(c); }

Scalar power(const Scalar& s, std::uint64_t e) {
  Scalar result = Scalar::one(s.domain());
  Scalar base = s;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}
UniPoly power(const UniPoly& p, std::uint64_t e) { return p.pow(e); }
BiPoly power(const BiPoly& p, std::uint64_t e) { return p.pow(e); }

// Horner over a sparse exponent set given in descending order.
template <class R, class Coeffs>
R horner(const Coeffs& descending, const R& at, const Scalar& zero) {
  R acc = lift(zero, at);
  bool started = false;
  std::uint64_t last = 0;
  for (const auto& [e, c] : descending) {
    if (started) acc = acc * power(at, last - e);
    acc = acc + c;
    last = e;
    started = true;
  }
  if (started && last > 0) acc = acc * power(at, last);
  return acc;
}

CoeffDomain domain_of(const Scalar& s) { return s.domain(); }
CoeffDomain domain_of(const UniPoly& p) { return p.domain(); }
CoeffDomain domain_of(const BiPoly& p) { return p.domain(); }

void require_match(const CoeffDomain& a, const CoeffDomain& b) {
  if (!(a == b)) throw DomainMismatch("substitution across domains: " + a.name() + " vs " + b.name());
}

template <class R>
R evaluate_uni(const UniPoly& p, const R& at) {
  require_match(p.domain(), domain_of(at));
  std::vector<std::pair<std::uint64_t, Scalar>> descending(p.terms().rbegin(), p.terms().rend());
  return horner(descending, at, Scalar::zero(p.domain()));
}

// h = sum_a x^a h_a(y); Horner in x over Horner in y.
template <class R>
R substitute_bi(const BiPoly& h, const R& x_at, const R& y_at) {
  require_match(h.domain(), domain_of(x_at));
  require_match(h.domain(), domain_of(y_at));
  std::map<std::uint64_t, std::map<std::uint64_t, Scalar>> by_x;
  for (const auto& [m, c] : h.terms()) by_x[m.x].emplace(m.y, c);

  const Scalar zero = Scalar::zero(h.domain());
  R acc = lift(zero, x_at);
  bool started = false;
  std::uint64_t last = 0;
  for (auto it = by_x.rbegin(); it != by_x.rend(); ++it) {
    std::vector<std::pair<std::uint64_t, Scalar>> ys(it->second.rbegin(), it->second.rend());
    R inner = horner(ys, y_at, zero);
    if (started) acc = acc * power(x_at, last - it->first);
    acc = acc + inner;
    last = it->first;
    started = true;
  }
  if (started && last > 0) acc = acc * power(x_at, last);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly UniPoly::constant(const Scalar& c) { return monomial(c, 0); }

UniPoly UniPoly::monomial(const Scalar& c, std::uint64_t exponent) {
  UniPoly p(c.domain());
  p.add_term(exponent, c);
  return p;
}

UniPoly UniPoly::variable(const CoeffDomain& domain) {
  return monomial(Scalar::one(domain), 1);
}

Degree UniPoly::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  return Degree(static_cast<std::int64_t>(terms_.rbegin()->first));
}

Scalar UniPoly::coefficient(std::uint64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar::zero(domain_) : it->second;
}

Scalar UniPoly::leading_coefficient() const {
  return terms_.empty() ? Scalar::zero(domain_) : terms_.rbegin()->second;
}

void UniPoly::require_domain(const CoeffDomain& other) const {
  if (!(domain_ == other)) {
    throw DomainMismatch("polynomial domains differ: " + domain_.name() + " vs " + other.name());
  }
}

void UniPoly::add_term(std::uint64_t exponent, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UniPoly UniPoly::operator-() const {
  UniPoly r(domain_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  require_domain(rhs.domain_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  require_domain(rhs.domain_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  require_domain(rhs.domain_);
  UniPoly product(domain_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) product.add_term(ea + eb, ca * cb);
  }
  terms_ = std::move(product.terms_);
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& rhs) {
  require_domain(rhs.domain());
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

UniPoly& UniPoly::operator+=(const Scalar& rhs) {
  require_domain(rhs.domain());
  add_term(0, rhs);
  return *this;
}

UniPoly UniPoly::pow(std::uint64_t exponent) const {
  UniPoly result = constant(Scalar::one(domain_));
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string UniPoly::to_string(char variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, it->second, power_text(variable, it->first));
  }
  return out;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::constant(const Scalar& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Scalar& c, std::uint32_t x_exp, std::uint32_t y_exp) {
  BiPoly p(c.domain());
  p.add_term({x_exp, y_exp}, c);
  return p;
}

BiPoly BiPoly::x(const CoeffDomain& domain) { return monomial(Scalar::one(domain), 1, 0); }

BiPoly BiPoly::y(const CoeffDomain& domain) { return monomial(Scalar::one(domain), 0, 1); }

Degree BiPoly::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  return Degree(static_cast<std::int64_t>(terms_.rbegin()->first.total()));
}

Scalar BiPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(domain_) : it->second;
}

BiPoly BiPoly::leading_form() const {
  if (terms_.empty()) throw std::invalid_argument("leading form of the zero polynomial");
  const auto top = terms_.rbegin()->first.total();
  BiPoly form(domain_);
  for (auto it = terms_.rbegin(); it != terms_.rend() && it->first.total() == top; ++it) {
    form.terms_.emplace(it->first, it->second);
  }
  return form;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly d(domain_);
  for (const auto& [m, c] : terms_) {
    if (m.x > 0) d.add_term({m.x - 1, m.y}, c * Scalar::from_int(m.x, domain_));
  }
  return d;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly d(domain_);
  for (const auto& [m, c] : terms_) {
    if (m.y > 0) d.add_term({m.x, m.y - 1}, c * Scalar::from_int(m.y, domain_));
  }
  return d;
}

void BiPoly::require_domain(const CoeffDomain& other) const {
  if (!(domain_ == other)) {
    throw DomainMismatch("polynomial domains differ: " + domain_.name() + " vs " + other.name());
  }
}

void BiPoly::add_term(Monomial m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly r(domain_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  require_domain(rhs.domain_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  require_domain(rhs.domain_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  require_domain(rhs.domain_);
  BiPoly product(domain_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      product.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

BiPoly& BiPoly::operator*=(const Scalar& rhs) {
  require_domain(rhs.domain());
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

BiPoly& BiPoly::operator+=(const Scalar& rhs) {
  require_domain(rhs.domain());
  add_term({0, 0}, rhs);
  return *this;
}

BiPoly BiPoly::pow(std::uint64_t exponent) const {
  BiPoly result = constant(Scalar::one(domain_));
  BiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono = power_text('x', it->first.x);
    const std::string ypart = power_text('y', it->first.y);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    append_term(out, it->second, mono);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

Scalar evaluate(const UniPoly& p, const Scalar& at) { return evaluate_uni(p, at); }

UniPoly evaluate(const UniPoly& p, const UniPoly& at) { return evaluate_uni(p, at); }

BiPoly evaluate(const UniPoly& p, const BiPoly& at) { return evaluate_uni(p, at); }

Scalar evaluate(const BiPoly& h, const Scalar& x, const Scalar& y) {
  return substitute_bi(h, x, y);
}

UniPoly substitute(const BiPoly& h, const UniPoly& xt, const UniPoly& yt) {
  return substitute_bi(h, xt, yt);
}

BiPoly substitute(const BiPoly& h, const BiPoly& x_image, const BiPoly& y_image) {
  return substitute_bi(h, x_image, y_image);
}

}  // namespace amcurve
