#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amcurve/automorph.hpp"
#include "amcurve/charseq.hpp"
#include "amcurve/poly.hpp"
#include "amcurve/semigroup.hpp"

namespace amcurve {

/// A chain or parametrization failed one of its defining identities.
class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Local intersection number, or infinite when the curves share a component.
class IntersectionNumber {
 public:
  static IntersectionNumber infinite() { return IntersectionNumber(); }
  explicit IntersectionNumber(std::int64_t value) : value_(value) {}

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  std::int64_t value() const;
  std::string to_string() const;

  friend bool operator==(const IntersectionNumber&, const IntersectionNumber&) = default;

 private:
  IntersectionNumber() = default;
  std::optional<std::int64_t> value_;
};

/// A polynomial parametrization t -> (x(t), y(t)).
struct Parametrization {
  UniPoly x;
  UniPoly y;
};

/// For a witness with components (f, g): t -> witness^{-1}(0, t). Checks
/// f(x(t), y(t)) = 0 and g(x(t), y(t)) = t, which makes the map a bijection
/// onto the curve f = 0.
Parametrization parametrize(const AutoWord& witness);

/// Intersection number at infinity of a curve with one branch at infinity,
/// given by its degree and a bijective polynomial parametrization, with the
/// curve h = 0:
///
///   i = curve_degree * deg h - deg_t h(x(t), y(t)).
///
/// Bezout splits curve_degree * deg h into the affine intersections (the
/// roots of h(x(t), y(t))) and the contribution at the unique point at
/// infinity.
IntersectionNumber bezout_intersection(const BiPoly& h, std::int64_t curve_degree, const Parametrization& param);

/// The chain f_1, ..., f_{h+1} of a coordinate line together with the
/// automorphism witnesses linking consecutive members.
class ChainAtInfinity {
 public:
  const CoeffDomain& domain() const { return domain_; }
  /// f_1, ..., f_{h+1}.
  const std::vector<BiPoly>& polys() const { return polys_; }
  /// Components (f_{k+1}, f_k) at index k - 1.
  const std::vector<AutoWord>& pair_witnesses() const { return pair_witnesses_; }
  /// n_1, ..., n_h.
  const std::vector<std::int64_t>& ratios() const { return ratios_; }
  /// d_1, ..., d_{h+1}.
  const std::vector<std::int64_t>& dchain() const { return dchain_; }
  const Parametrization& param() const { return param_; }

  /// n = d_1 = deg f_{h+1}.
  std::int64_t degree() const { return dchain_.front(); }
  std::size_t length() const { return ratios_.size(); }
  const BiPoly& f(std::size_t k) const { return polys_.at(k - 1); }
  std::vector<std::int64_t> degrees() const;

  /// r_0 = d_1, r_k = d_1^2 / d_k - d_{k+1}.
  std::vector<Integer> realized_sequence() const;

  friend ChainAtInfinity build_chain(const AmSequence& r, const CoeffDomain& domain);
  friend ChainAtInfinity chain_from_skeleton(const ChainSkeleton& skeleton);

 private:
  ChainAtInfinity() = default;
  void finish_and_validate();

  CoeffDomain domain_;
  std::vector<BiPoly> polys_;
  std::vector<AutoWord> pair_witnesses_;
  std::vector<std::int64_t> ratios_;
  std::vector<std::int64_t> dchain_;
  Parametrization param_;
};

/// f_1 = y, f_2 = y^{n_1} - x, f_{k+1} = f_k^{n_k} - f_{k-1} with
/// n_k = d_k / d_{k+1}. Requires r_0 > 1.
ChainAtInfinity build_chain(const AmSequence& r, const CoeffDomain& domain);

/// Chain of a decomposed coordinate line.
ChainAtInfinity chain_from_skeleton(const ChainSkeleton& skeleton);

/// Throws std::invalid_argument for h = 0.
IntersectionNumber intersection_at_infinity(const BiPoly& h, const ChainAtInfinity& chain);

struct IntersectionReport {
  std::vector<Integer> sequence;
  std::vector<std::int64_t> dchain;
  std::vector<std::int64_t> degrees;
  /// i(gamma_k, gamma) for k = 1..h.
  std::vector<IntersectionNumber> intersections;
  /// i(gamma_k, gamma_{k+1}) for k = 1..h.
  std::vector<IntersectionNumber> pairwise;
  /// (n, i_1, ..., i_h).
  std::vector<std::int64_t> extracted;
  /// i(gamma_j, gamma_k)/(deg f_j deg f_k); empty on the diagonal.
  std::vector<std::vector<std::optional<Rational>>> dlambda;

  bool degrees_ok = false;      // deg f_k = n/d_k
  bool values_ok = false;       // i(gamma_k, gamma) = r_k
  bool consecutive_ok = false;  // i(gamma_k, gamma_{k+1}) = n^2/(d_k d_{k+1}) - 1
  bool ultrametric = false;
  /// One line per violated identity.
  std::vector<std::string> failures;

  bool all() const { return degrees_ok && values_ok && consecutive_ok && ultrametric; }
};

/// Checks deg f_k = n/d_k, i(gamma_k, gamma) = r_k, the consecutive values
/// n^2/(d_k d_{k+1}) - 1, and the ultrametric rule on the d_lambda matrix.
/// Violations are reported, not thrown.
IntersectionReport verify_theorem(const ChainAtInfinity& chain, const CharSequence& r);

struct UltrametricResult {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> witness;  // 1-based branch indices
};

/// Among the three values of every index triple the two smallest are equal.
UltrametricResult ultrametric_check(const IntersectionReport& report);

/// d_lambda(gamma_j, gamma_k) = 1 - d_j d_{j+1} / d_1^2 for every j < k.
bool dlambda_matches_closed_form(const IntersectionReport& report);

struct OracleSample {
  std::string poly;
  std::int64_t degree = 0;
  IntersectionNumber value = IntersectionNumber::infinite();
};

/// Intersection numbers of the chain's curve with every monomial of total
/// degree <= degree_bound (by degree, then x-exponent descending) and then
/// `trials` seeded random polynomials with coefficients in {-2, -1, 1, 2}.
std::vector<OracleSample> semigroup_sampling_oracle(const ChainAtInfinity& chain, std::size_t trials,
                                                    std::uint32_t degree_bound, std::uint64_t seed);

/// Same sampling over an arbitrary parametrized curve of the given degree.
std::vector<OracleSample> sample_intersections(const Parametrization& param, std::int64_t curve_degree,
                                               std::size_t trials, std::uint32_t degree_bound,
                                               std::uint64_t seed);

struct OracleVerdict {
  std::size_t finite = 0;
  std::size_t infinite = 0;
  bool produced_zero = false;
  std::vector<OracleSample> non_members;

  bool ok() const { return non_members.empty() && produced_zero; }
};

OracleVerdict check_oracle_membership(const std::vector<OracleSample>& samples, const NumericalSemigroup& g);

enum class NagataCase { kI, kII };

struct NagataRecord {
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  NagataCase which = NagataCase::kI;
  BiPoly f;
  BiPoly g;
  Parametrization param;
  bool f_vanishes = false;  // f(x(t), y(t)) = 0
  bool g_is_t = false;      // g(x(t), y(t)) = t
  /// Closed form for the case.
  std::vector<Integer> expected;
  /// r_0 = deg f, r_1 from the line through the point at infinity, r_2 from
  /// the conductor formula.
  std::vector<Integer> computed;
  AxiomReport axioms;

  /// (1), (2), (4) hold and (3) fails, and the computed sequence matches.
  bool matches_expectation() const;
};

/// x(t) = t^{p^2}, y(t) = t + t^{ap}, f = (y^p - x^a)^p - x,
/// g = y - (y^p - x^a)^a over F_p. Requires p prime, a > 1, gcd(a, p) = 1.
NagataRecord nagata(std::uint64_t p, std::uint64_t a);

}  // namespace amcurve
