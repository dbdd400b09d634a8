#include "amcurve/charseq.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace amcurve {

namespace {

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += values[i].get_str();
  }
  return out;
}

std::vector<Integer> divisors_below(const Integer& n) {
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    const Integer co = n / d;
    if (co != d) large.push_back(co);
  }
  std::vector<Integer> all(small);
  all.insert(all.end(), large.rbegin(), large.rend());
  all.pop_back();  // n itself
  return all;
}

void extend_chains(std::vector<Integer>& prefix, std::vector<DivisorChain>& out) {
  const Integer last = prefix.back();
  if (last == 1) {
    out.emplace_back(prefix);
    return;
  }
  for (const Integer& e : divisors_below(last)) {
    prefix.push_back(e);
    extend_chains(prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Integer> gcd_chain(std::span<const Integer> r) {
  if (r.empty()) throw InvalidSequence("sequence is empty");
  std::vector<Integer> d;
  d.reserve(r.size());
  for (const Integer& value : r) {
    if (value <= 0) throw InvalidSequence("sequence entries must be positive, got " + value.get_str());
    d.push_back(d.empty() ? value : gcd(d.back(), value));
  }
  return d;
}

CharSequence::CharSequence(std::vector<Integer> terms)
    : terms_(std::move(terms)), dchain_(gcd_chain(terms_)) {
  ratios_.reserve(dchain_.size() - 1);
  for (std::size_t k = 0; k + 1 < dchain_.size(); ++k) ratios_.push_back(dchain_[k] / dchain_[k + 1]);
}

std::string CharSequence::to_string() const { return join(terms_); }

AxiomReport check_axioms(const CharSequence& r) {
  AxiomReport rep;
  rep.dchain = r.dchain();
  const std::size_t h = r.length();

  rep.gcd_descent = r.d(h + 1) == 1;
  for (std::size_t k = 1; k <= h; ++k) {
    if (!(r.d(k) > r.d(k + 1))) rep.gcd_descent = false;
  }

  rep.weighted_growth = true;
  for (std::size_t k = 1; k < h; ++k) {
    if (!(r.d(k) * r.r(k) < r.d(k + 1) * r.r(k + 1))) rep.weighted_growth = false;
  }

  rep.am_rhs = r.r(0) * r.r(0);
  rep.am_lhs = h == 0 ? Integer(0) : Integer(r.d(h) * r.r(h));
  rep.am_inequality = h == 0 || rep.am_lhs < rep.am_rhs;

  rep.conductor_lhs = 0;
  for (std::size_t k = 1; k <= h; ++k) rep.conductor_lhs += (r.n(k) - 1) * r.r(k);
  rep.conductor_rhs = (r.r(0) - 1) * (r.r(0) - 1);
  rep.conductor = rep.conductor_lhs == rep.conductor_rhs;
  return rep;
}

AmSequence AmSequence::certify(const CharSequence& r) {
  const AxiomReport rep = check_axioms(r);
  const char* failed = !rep.gcd_descent       ? "(1)"
                       : !rep.weighted_growth ? "(2)"
                       : !rep.am_inequality   ? "(3)"
                       : !rep.conductor       ? "(4)"
                                              : nullptr;
  if (failed != nullptr) {
    throw InvalidSequence("sequence " + r.to_string() + " violates axiom " + failed);
  }
  return AmSequence(r);
}

DivisorChain::DivisorChain(std::vector<Integer> d) : d_(std::move(d)) {
  if (d_.empty()) throw InvalidSequence("divisor chain is empty");
  if (d_.back() != 1) throw InvalidSequence("divisor chain must end in 1: " + to_string());
  for (std::size_t k = 0; k + 1 < d_.size(); ++k) {
    if (!(d_[k] > d_[k + 1]) || d_[k] % d_[k + 1] != 0) {
      throw InvalidSequence("divisor chain must strictly decrease under divisibility: " + to_string());
    }
  }
}

std::string DivisorChain::to_string() const { return join(d_); }

AmSequence am_from_chain(const DivisorChain& chain) {
  const auto& d = chain.values();
  const Integer square = d.front() * d.front();
  std::vector<Integer> r{d.front()};
  for (std::size_t k = 0; k + 1 < d.size(); ++k) r.push_back(square / d[k] - d[k + 1]);

  CharSequence seq(std::move(r));
  if (seq.dchain() != d) throw std::logic_error("am_from_chain: gcd chain mismatch for " + chain.to_string());
  return AmSequence::certify(seq);
}

DivisorChain chain_from_am(const CharSequence& r) {
  AmSequence::certify(r);
  const Integer square = r.initial() * r.initial();
  for (std::size_t k = 1; k <= r.length(); ++k) {
    if (r.r(k) != square / r.d(k) - r.d(k + 1)) {
      throw std::logic_error("chain_from_am: r_k = d_1^2/d_k - d_{k+1} fails at k = " +
                             std::to_string(k) + " for " + r.to_string());
    }
  }
  return DivisorChain(r.dchain());
}

std::vector<DivisorChain> divisor_chains(const Integer& n) {
  if (n < 1) throw InvalidSequence("chain start must be positive, got " + n.get_str());
  std::vector<DivisorChain> out;
  std::vector<Integer> prefix{n};
  extend_chains(prefix, out);
  return out;
}

std::vector<AmSequence> enumerate_am(const Integer& n) {
  if (n <= 1) throw InvalidSequence("initial term must exceed 1, got " + n.get_str());
  std::vector<AmSequence> out;
  for (const auto& chain : divisor_chains(n)) out.push_back(am_from_chain(chain));
  return out;
}

TelescopingCheck telescoping_identity_check(const CharSequence& r) {
  AmSequence::certify(r);
  TelescopingCheck check;
  const Integer square = r.initial() * r.initial();
  check.total = 0;
  for (std::size_t k = 1; k <= r.length(); ++k) {
    Integer slack = square / r.d(k) - r.d(k + 1) - r.r(k);
    Integer summand = (r.n(k) - 1) * slack;
    check.total += summand;
    check.slack.push_back(std::move(slack));
    check.summands.push_back(std::move(summand));
  }
  return check;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InvalidSequence("empty entry in integer list '" + text + "'");
    const std::string digits = item.substr(first, last - first + 1);
    const bool numeric = std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
    if (!numeric) throw InvalidSequence("not a nonnegative integer: '" + digits + "'");
    out.emplace_back(digits);
  }
  if (out.empty() || text.back() == ',') throw InvalidSequence("malformed integer list '" + text + "'");
  return out;
}

}  // namespace amcurve
