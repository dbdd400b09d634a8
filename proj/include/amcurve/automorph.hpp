#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "amcurve/poly.hpp"

namespace amcurve {

/// A witness or polynomial pair failed an automorphism requirement.
class AutomorphismError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (x, y) -> (a x + b y + e, c x + d y + f), with ad - bc != 0.
struct AffineMove {
  Scalar a, b, c, d, e, f;
  friend bool operator==(const AffineMove&, const AffineMove&) = default;
};

/// (x, y) -> (x + P(y), y).
struct ElemXMove {
  UniPoly p;
  friend bool operator==(const ElemXMove&, const ElemXMove&) = default;
};

/// (x, y) -> (x, y + P(x)).
struct ElemYMove {
  UniPoly p;
  friend bool operator==(const ElemYMove&, const ElemYMove&) = default;
};

class Move {
 public:
  /// Throws AutomorphismError on a zero determinant.
  static Move affine(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f);
  /// P must have degree >= 2; lower-degree shears are affine moves.
  static Move elem_x(UniPoly p);
  static Move elem_y(UniPoly p);

  static Move identity(const CoeffDomain& domain);
  /// (x, y) -> (y, x).
  static Move swap(const CoeffDomain& domain);

  CoeffDomain domain() const;
  Move inverse() const;

  /// Image of a point or of a polynomial pair under the move.
  std::pair<Scalar, Scalar> apply(const Scalar& x, const Scalar& y) const;
  std::pair<UniPoly, UniPoly> apply(const UniPoly& x, const UniPoly& y) const;
  std::pair<BiPoly, BiPoly> apply(const BiPoly& x, const BiPoly& y) const;

  const std::variant<AffineMove, ElemXMove, ElemYMove>& kind() const { return kind_; }

  friend bool operator==(const Move&, const Move&) = default;

 private:
  explicit Move(std::variant<AffineMove, ElemXMove, ElemYMove> kind) : kind_(std::move(kind)) {}
  std::variant<AffineMove, ElemXMove, ElemYMove> kind_;
};

/// A plane automorphism as a word of moves applied left to right: the
/// image of a point p is m_k(...m_1(p)). The component pair (F, G) is the
/// image of the generic point (x, y).
class AutoWord {
 public:
  explicit AutoWord(CoeffDomain domain = CoeffDomain::rational());
  AutoWord(CoeffDomain domain, std::vector<Move> moves);

  const CoeffDomain& domain() const { return domain_; }
  const std::vector<Move>& moves() const { return moves_; }
  const BiPoly& first() const { return first_; }
  const BiPoly& second() const { return second_; }

  AutoWord then(const Move& m) const;
  AutoWord inverse() const;

  std::pair<Scalar, Scalar> apply(const Scalar& x, const Scalar& y) const;
  std::pair<UniPoly, UniPoly> apply(const UniPoly& x, const UniPoly& y) const;

 private:
  CoeffDomain domain_;
  std::vector<Move> moves_;
  BiPoly first_;
  BiPoly second_;
};

/// u first, then v.
AutoWord compose(const AutoWord& u, const AutoWord& v);

/// F_x G_y - F_y G_x.
BiPoly jacobian_determinant(const BiPoly& f, const BiPoly& g);

/// One step g -> g - c f^N of degree reduction.
struct ReductionStep {
  std::uint64_t power;
  Scalar factor;
};

struct Reduction {
  BiPoly reduced;
  std::vector<ReductionStep> steps;
};

/// Subtracts c f^N from g while deg g >= stop_degree, with N = deg g / deg f
/// and c the ratio of leading forms. Throws AutomorphismError when deg f
/// does not divide deg g or when LF(g) is not a constant multiple of LF(f)^N.
/// Every step strictly lowers deg g. stop_degree defaults to deg f.
Reduction reduce_degree(const BiPoly& g, const BiPoly& f);
Reduction reduce_degree(const BiPoly& g, const BiPoly& f, std::int64_t stop_degree);

/// The move realizing one reduction step on the first component.
Move reduction_move(const ReductionStep& step, const CoeffDomain& domain);

/// Degree reduction of an automorphism pair: witness components must be
/// (g, f) and deg f > 1. Returns g~ with deg g~ < deg f and the witness for
/// (g~, f).
std::pair<BiPoly, AutoWord> degree_reduce(const BiPoly& g, const BiPoly& f, const AutoWord& witness);

/// f_1, ..., f_{h+1} with deg f_1 = 1, each deg f_k dividing deg f_{k+1},
/// and pair_witnesses[k-1] having components (f_{k+1}, f_k).
struct ChainSkeleton {
  std::vector<BiPoly> polys;
  std::vector<AutoWord> pair_witnesses;
  /// Components (g, f) of the certified input pair.
  AutoWord witness;

  std::vector<std::int64_t> degrees() const;
};

/// Decomposes the coordinate line f = 0 with partner g by repeated degree
/// reduction. The pair (g, f) is certified along the way: the reduction
/// must end at an invertible affine pair, and the reconstructed word must
/// reproduce (g, f) exactly. Requires deg f > 1.
ChainSkeleton decompose_line(const BiPoly& f, const BiPoly& g);
/// As above, additionally checking the witness has components (g, f).
ChainSkeleton decompose_line(const BiPoly& f, const BiPoly& g, const AutoWord& witness);

nlohmann::json to_json(const AutoWord& word);
/// Throws AutomorphismError or ParseError on malformed input.
AutoWord word_from_json(const nlohmann::json& j, const CoeffDomain& domain);

}  // namespace amcurve
