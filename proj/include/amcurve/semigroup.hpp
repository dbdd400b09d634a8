#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "amcurve/numeric.hpp"

namespace amcurve {

class SemigroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SemigroupInvariants {
  std::vector<std::uint64_t> gaps;
  std::uint64_t genus = 0;
  /// -1 when there are no gaps.
  std::int64_t frobenius = -1;
  std::uint64_t conductor = 0;
  std::vector<std::uint64_t> minimal_generators;
};

/// The submonoid of N generated by a finite set, with a membership table
/// over [0, bound()].
///
/// When the generators are coprime the table is extended until it holds a
/// run of min(generators) consecutive members; everything past that run is
/// a member, so the conductor c is exact, and the bound is then raised to
/// at least c + max(generators).
class NumericalSemigroup {
 public:
  /// Throws SemigroupError on an empty list or a zero generator.
  /// `min_bound` forces the table to reach at least that far.
  static NumericalSemigroup generate(std::span<const std::uint64_t> generators,
                                     std::uint64_t min_bound = 0);
  /// Same, from arbitrary-precision values that must fit in 64 bits.
  static NumericalSemigroup generate(std::span<const Integer> generators,
                                     std::uint64_t min_bound = 0);

  const std::vector<std::uint64_t>& generators() const { return generators_; }
  std::uint64_t bound() const { return bound_; }
  std::uint64_t generator_gcd() const { return gcd_; }

  /// Exact for any s: beyond the table, membership follows from the conductor
  /// (coprime case) or throws SemigroupError (non-coprime case).
  bool contains(std::uint64_t s) const;

  /// Throws SemigroupError when gcd(generators) > 1.
  std::uint64_t conductor() const;
  SemigroupInvariants invariants() const;

  /// Members in [0, up_to], up_to <= bound().
  std::vector<std::uint64_t> members_up_to(std::uint64_t up_to) const;

 private:
  NumericalSemigroup() = default;
  void extend_table(std::uint64_t new_bound);

  std::vector<std::uint64_t> generators_;
  std::uint64_t gcd_ = 0;
  std::uint64_t bound_ = 0;
  std::vector<bool> member_;
  std::optional<std::uint64_t> conductor_;
};

/// r_0 = r0, then r_k = min(G minus <r_0, ..., r_{k-1}>) until the partial
/// semigroup agrees with G on [0, conductor + r0). Throws SemigroupError
/// when r0 is not in G, when gcd > 1, or when the table is too short.
std::vector<std::uint64_t> recover_sequence(const NumericalSemigroup& g, std::uint64_t r0);

std::uint64_t to_u64(const Integer& value);

}  // namespace amcurve
