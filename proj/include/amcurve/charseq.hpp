#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "amcurve/numeric.hpp"

namespace amcurve {

/// Thrown when an input sequence or chain violates a structural precondition.
class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// d_1 = r_0, d_{k+1} = gcd(d_k, r_k). Entries must be positive.
std::vector<Integer> gcd_chain(std::span<const Integer> r);

/// A positive-integer sequence (r_0, ..., r_h) with its gcd chain
/// (d_1, ..., d_{h+1}) and ratios n_k = d_k / d_{k+1}. No axioms are implied.
class CharSequence {
 public:
  /// Throws InvalidSequence on an empty sequence or a nonpositive entry.
  explicit CharSequence(std::vector<Integer> terms);

  const std::vector<Integer>& terms() const { return terms_; }
  const std::vector<Integer>& dchain() const { return dchain_; }
  const std::vector<Integer>& ratios() const { return ratios_; }
  /// h, so that terms() has h + 1 entries.
  std::size_t length() const { return terms_.size() - 1; }
  const Integer& initial() const { return terms_.front(); }

  /// r_k, d_k, n_k using the 0-based r and 1-based d/n indexing of the math.
  const Integer& r(std::size_t k) const { return terms_.at(k); }
  const Integer& d(std::size_t k) const { return dchain_.at(k - 1); }
  const Integer& n(std::size_t k) const { return ratios_.at(k - 1); }

  std::string to_string() const;

  friend bool operator==(const CharSequence& a, const CharSequence& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Integer> terms_;
  std::vector<Integer> dchain_;
  std::vector<Integer> ratios_;
};

/// Outcome of evaluating axioms (1)-(4) on a sequence exactly as written.
struct AxiomReport {
  std::vector<Integer> dchain;
  bool gcd_descent = false;      // (1) d_k > d_{k+1}, d_{h+1} = 1
  bool weighted_growth = false;  // (2) d_k r_k < d_{k+1} r_{k+1}
  bool am_inequality = false;    // (3) d_h r_h < r_0^2
  bool conductor = false;        // (4) sum (d_k/d_{k+1} - 1) r_k = (r_0 - 1)^2

  // Both sides of (3) (zero when h = 0) and (4).
  Integer am_lhs;
  Integer am_rhs;
  Integer conductor_lhs;
  Integer conductor_rhs;

  bool characteristic() const { return gcd_descent && weighted_growth; }
  bool all() const { return gcd_descent && weighted_growth && am_inequality && conductor; }
};

AxiomReport check_axioms(const CharSequence& r);

/// A sequence satisfying all four axioms.
class AmSequence {
 public:
  /// Throws InvalidSequence naming the first failing axiom.
  static AmSequence certify(const CharSequence& r);

  const CharSequence& sequence() const { return seq_; }
  const std::vector<Integer>& terms() const { return seq_.terms(); }

  friend bool operator==(const AmSequence&, const AmSequence&) = default;

 private:
  explicit AmSequence(CharSequence seq) : seq_(std::move(seq)) {}
  CharSequence seq_;
};

/// d_1 > d_2 > ... > d_{h+1} = 1 with d_{k+1} | d_k.
class DivisorChain {
 public:
  /// Throws InvalidSequence when the chain is not strictly decreasing under
  /// divisibility or does not end in 1.
  explicit DivisorChain(std::vector<Integer> d);

  const std::vector<Integer>& values() const { return d_; }
  std::string to_string() const;

  friend bool operator==(const DivisorChain&, const DivisorChain&) = default;

 private:
  std::vector<Integer> d_;
};

/// r_0 = d_1, r_k = d_1^2 / d_k - d_{k+1}.
AmSequence am_from_chain(const DivisorChain& chain);

/// Inverse of am_from_chain. Requires all axioms; verifies
/// r_k = d_1^2 / d_k - d_{k+1} term by term.
DivisorChain chain_from_am(const CharSequence& r);

/// All divisor chains starting at n, in lexicographic order.
std::vector<DivisorChain> divisor_chains(const Integer& n);

/// One AM sequence per divisor chain of n, in the order of divisor_chains(n).
std::vector<AmSequence> enumerate_am(const Integer& n);

struct TelescopingCheck {
  /// e_k = n^2/d_k - d_{k+1} - r_k, each must be >= 0.
  std::vector<Integer> slack;
  /// (d_k/d_{k+1} - 1) * e_k.
  std::vector<Integer> summands;
  Integer total;
};

/// Requires all axioms. The total is zero for every AM sequence.
TelescopingCheck telescoping_identity_check(const CharSequence& r);

/// Parses "6,4,17" (optional whitespace). Throws InvalidSequence.
std::vector<Integer> parse_integer_list(const std::string& text);

}  // namespace amcurve
