#include "amcurve/automorph.hpp"

#include <map>

namespace amcurve {

namespace {

Scalar constant_of(const BiPoly& p) { return p.coefficient({0, 0}); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Affine images for scalars and polynomials share one formula.
template <class R>
std::pair<R, R> apply_move(const std::variant<AffineMove, ElemXMove, ElemYMove>& kind, const R& x,
                           const R& y) {
  return std::visit(Overloaded{
                        [&](const AffineMove& m) {
                          return std::pair<R, R>{x * m.a + y * m.b + m.e, x * m.c + y * m.d + m.f};
                        },
                        [&](const ElemXMove& m) { return std::pair<R, R>{x + evaluate(m.p, y), y}; },
                        [&](const ElemYMove& m) { return std::pair<R, R>{x, y + evaluate(m.p, x)}; },
                    },
                    kind);
}

void require_domain(const CoeffDomain& expected, const CoeffDomain& actual, const char* what) {
  if (!(expected == actual)) {
    throw DomainMismatch(std::string(what) + ": expected " + expected.name() + ", got " + actual.name());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Move

Move Move::affine(Scalar a, Scalar b, Scalar c, Scalar d, Scalar e, Scalar f) {
  const CoeffDomain dom = a.domain();
  for (const Scalar* s : {&b, &c, &d, &e, &f}) require_domain(dom, s->domain(), "affine move");
  if ((a * d - b * c).is_zero()) throw AutomorphismError("affine move has zero determinant");
  return Move(AffineMove{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f)});
}

Move Move::elem_x(UniPoly p) {
  if (p.degree() < 2) throw AutomorphismError("elementary move needs degree >= 2, got " + p.to_string('y'));
  return Move(ElemXMove{std::move(p)});
}

Move Move::elem_y(UniPoly p) {
  if (p.degree() < 2) throw AutomorphismError("elementary move needs degree >= 2, got " + p.to_string('x'));
  return Move(ElemYMove{std::move(p)});
}

Move Move::identity(const CoeffDomain& domain) {
  const Scalar zero = Scalar::zero(domain);
  const Scalar one = Scalar::one(domain);
  return affine(one, zero, zero, one, zero, zero);
}

Move Move::swap(const CoeffDomain& domain) {
  const Scalar zero = Scalar::zero(domain);
  const Scalar one = Scalar::one(domain);
  return affine(zero, one, one, zero, zero, zero);
}

CoeffDomain Move::domain() const {
  return std::visit(Overloaded{
                        [](const AffineMove& m) { return m.a.domain(); },
                        [](const ElemXMove& m) { return m.p.domain(); },
                        [](const ElemYMove& m) { return m.p.domain(); },
                    },
                    kind_);
}

Move Move::inverse() const {
  return std::visit(Overloaded{
                        [](const AffineMove& m) {
                          // (x, y) = M^{-1} ((u, v) - (e, f))
                          const Scalar det = m.a * m.d - m.b * m.c;
                          const Scalar ia = m.d / det;
                          const Scalar ib = -m.b / det;
                          const Scalar ic = -m.c / det;
                          const Scalar id = m.a / det;
                          return Move::affine(ia, ib, ic, id, -(ia * m.e + ib * m.f), -(ic * m.e + id * m.f));
                        },
                        [](const ElemXMove& m) { return Move(ElemXMove{-m.p}); },
                        [](const ElemYMove& m) { return Move(ElemYMove{-m.p}); },
                    },
                    kind_);
}

std::pair<Scalar, Scalar> Move::apply(const Scalar& x, const Scalar& y) const {
  return apply_move(kind_, x, y);
}

std::pair<UniPoly, UniPoly> Move::apply(const UniPoly& x, const UniPoly& y) const {
  return apply_move(kind_, x, y);
}

std::pair<BiPoly, BiPoly> Move::apply(const BiPoly& x, const BiPoly& y) const {
  return apply_move(kind_, x, y);
}

// ---------------------------------------------------------------------------
// AutoWord

AutoWord::AutoWord(CoeffDomain domain)
    : domain_(domain), first_(BiPoly::x(domain)), second_(BiPoly::y(domain)) {}

AutoWord::AutoWord(CoeffDomain domain, std::vector<Move> moves) : AutoWord(domain) {
  for (const Move& m : moves) {
    require_domain(domain_, m.domain(), "word move");
    std::tie(first_, second_) = m.apply(first_, second_);
  }
  moves_ = std::move(moves);
}

AutoWord AutoWord::then(const Move& m) const {
  require_domain(domain_, m.domain(), "word move");
  AutoWord out = *this;
  out.moves_.push_back(m);
  std::tie(out.first_, out.second_) = m.apply(first_, second_);
  return out;
}

AutoWord AutoWord::inverse() const {
  std::vector<Move> inv;
  inv.reserve(moves_.size());
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) inv.push_back(it->inverse());
  return AutoWord(domain_, std::move(inv));
}

std::pair<Scalar, Scalar> AutoWord::apply(const Scalar& x, const Scalar& y) const {
  std::pair<Scalar, Scalar> p{x, y};
  for (const Move& m : moves_) p = m.apply(p.first, p.second);
  return p;
}

std::pair<UniPoly, UniPoly> AutoWord::apply(const UniPoly& x, const UniPoly& y) const {
  std::pair<UniPoly, UniPoly> p{x, y};
  for (const Move& m : moves_) p = m.apply(p.first, p.second);
  return p;
}

AutoWord compose(const AutoWord& u, const AutoWord& v) {
  require_domain(u.domain(), v.domain(), "compose");
  AutoWord out = u;
  for (const Move& m : v.moves()) out = out.then(m);
  return out;
}

BiPoly jacobian_determinant(const BiPoly& f, const BiPoly& g) {
  return f.derivative_x() * g.derivative_y() - f.derivative_y() * g.derivative_x();
}

// ---------------------------------------------------------------------------
// Degree reduction

Reduction reduce_degree(const BiPoly& g, const BiPoly& f) {
  return reduce_degree(g, f, f.degree().is_neg_infinity() ? 0 : f.degree().value());
}

Reduction reduce_degree(const BiPoly& g, const BiPoly& f, std::int64_t stop_degree) {
  require_domain(f.domain(), g.domain(), "degree reduction");
  if (f.degree() < 1) throw AutomorphismError("cannot reduce against a constant: " + f.to_string());
  const std::int64_t df = f.degree().value();
  const BiPoly lf = f.leading_form();
  std::map<std::uint64_t, BiPoly> f_powers;
  std::map<std::uint64_t, BiPoly> lf_powers;

  Reduction out{g, {}};
  const Degree start = g.degree();
  while (out.reduced.degree() >= std::max<std::int64_t>(stop_degree, 1)) {
    const std::int64_t dg = out.reduced.degree().value();
    if (static_cast<std::int64_t>(out.steps.size()) > start.value()) {
      throw std::logic_error("degree reduction did not terminate within deg g steps");
    }
    if (dg % df != 0) {
      throw AutomorphismError("neither degree divides the other: deg " + std::to_string(dg) + " vs deg " +
                              std::to_string(df));
    }
    const auto power = static_cast<std::uint64_t>(dg / df);
    auto [lit, lnew] = lf_powers.try_emplace(power, BiPoly(f.domain()));
    if (lnew) lit->second = lf.pow(power);
    const BiPoly& target = lit->second;

    const BiPoly lg = out.reduced.leading_form();
    const Monomial top = target.terms().rbegin()->first;
    const Scalar c = lg.coefficient(top) / target.terms().rbegin()->second;
    if (c.is_zero() || !(lg == target * c)) {
      throw AutomorphismError("leading form of " + out.reduced.to_string() +
                              " is not a constant multiple of a power of the leading form of " + f.to_string());
    }

    auto [fit, fnew] = f_powers.try_emplace(power, BiPoly(f.domain()));
    if (fnew) fit->second = f.pow(power);
    out.reduced -= fit->second * c;
    out.steps.push_back({power, c});
    if (!(out.reduced.degree() < Degree(dg))) throw std::logic_error("degree reduction step did not lower degree");
  }
  return out;
}

Move reduction_move(const ReductionStep& step, const CoeffDomain& domain) {
  const Scalar zero = Scalar::zero(domain);
  const Scalar one = Scalar::one(domain);
  if (step.power == 1) return Move::affine(one, -step.factor, zero, one, zero, zero);
  return Move::elem_x(UniPoly::monomial(-step.factor, step.power));
}

std::pair<BiPoly, AutoWord> degree_reduce(const BiPoly& g, const BiPoly& f, const AutoWord& witness) {
  if (!(witness.first() == g) || !(witness.second() == f)) {
    throw AutomorphismError("witness components do not match (g, f)");
  }
  if (f.degree() <= 1) throw AutomorphismError("degree reduction requires deg f > 1");
  Reduction red = reduce_degree(g, f);
  AutoWord w = witness;
  for (const auto& step : red.steps) w = w.then(reduction_move(step, f.domain()));
  if (!(w.first() == red.reduced) || !(w.second() == f)) {
    throw std::logic_error("degree_reduce: updated witness disagrees with reduced pair");
  }
  return {std::move(red.reduced), std::move(w)};
}

// ---------------------------------------------------------------------------
// Decomposition

std::vector<std::int64_t> ChainSkeleton::degrees() const {
  std::vector<std::int64_t> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.degree().value());
  return out;
}

ChainSkeleton decompose_line(const BiPoly& f, const BiPoly& g) {
  require_domain(f.domain(), g.domain(), "decompose_line");
  const CoeffDomain dom = f.domain();
  if (f.degree() <= 1) throw AutomorphismError("coordinate line must have degree > 1, got " + f.degree().to_string());

  // State (p, q) is the image of (g, f) under the moves applied so far.
  std::vector<Move> applied;
  BiPoly p = g;
  BiPoly q = f;
  auto run_reduction = [&](std::int64_t stop) {
    Reduction red = reduce_degree(p, q, stop);
    for (const auto& step : red.steps) applied.push_back(reduction_move(step, dom));
    p = std::move(red.reduced);
    if (p.degree() < 1) {
      throw AutomorphismError("pair is not an automorphism: reduction reached the constant " + p.to_string());
    }
  };

  std::vector<BiPoly> descending{f};
  std::vector<std::size_t> marks;
  const Move swap = Move::swap(dom);
  for (;;) {
    run_reduction(q.degree().value());
    const std::int64_t lower = p.degree().value();
    const std::int64_t upper = q.degree().value();
    if (upper % lower != 0) {
      throw AutomorphismError("neither degree divides the other: deg " + std::to_string(lower) + " vs deg " +
                              std::to_string(upper));
    }
    descending.push_back(p);
    std::swap(p, q);
    applied.push_back(swap);
    marks.push_back(applied.size());
    if (q.degree() == 1) break;
  }

  // Base: bring the partner of the linear f_1 down to degree 1.
  run_reduction(2);
  const Scalar a = p.coefficient({1, 0});
  const Scalar b = p.coefficient({0, 1});
  const Scalar c = q.coefficient({1, 0});
  const Scalar d = q.coefficient({0, 1});
  if ((a * d - b * c).is_zero()) {
    throw AutomorphismError("pair is not an automorphism: linear base (" + p.to_string() + ", " + q.to_string() +
                            ") is degenerate");
  }
  const Move base = Move::affine(a, b, c, d, constant_of(p), constant_of(q));

  // Walk back: the word [base, applied^-1 ...] reproduces every intermediate state.
  ChainSkeleton out;
  out.polys.assign(descending.rbegin(), descending.rend());
  std::vector<AutoWord> at_mark(applied.size() + 1);
  AutoWord w(dom, {base});
  at_mark[applied.size()] = w;
  for (std::size_t j = applied.size(); j-- > 0;) {
    w = w.then(applied[j].inverse());
    at_mark[j] = w;
  }
  out.witness = at_mark[0];
  if (!(out.witness.first() == g) || !(out.witness.second() == f)) {
    throw std::logic_error("decompose_line: reconstructed word does not reproduce (g, f)");
  }
  for (auto it = marks.rbegin(); it != marks.rend(); ++it) out.pair_witnesses.push_back(at_mark[*it]);

  for (std::size_t k = 0; k + 1 < out.polys.size(); ++k) {
    const AutoWord& pw = out.pair_witnesses[k];
    if (!(pw.first() == out.polys[k + 1]) || !(pw.second() == out.polys[k])) {
      throw std::logic_error("decompose_line: pair witness mismatch at k = " + std::to_string(k + 1));
    }
  }
  return out;
}

ChainSkeleton decompose_line(const BiPoly& f, const BiPoly& g, const AutoWord& witness) {
  if (!(witness.first() == g) || !(witness.second() == f)) {
    throw AutomorphismError("witness components do not match (g, f)");
  }
  return decompose_line(f, g);
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const AutoWord& word) {
  nlohmann::json moves = nlohmann::json::array();
  for (const Move& m : word.moves()) {
    std::visit(Overloaded{
                   [&](const AffineMove& a) {
                     moves.push_back({{"type", "affine"},
                                      {"a", a.a.to_string()},
                                      {"b", a.b.to_string()},
                                      {"c", a.c.to_string()},
                                      {"d", a.d.to_string()},
                                      {"e", a.e.to_string()},
                                      {"f", a.f.to_string()}});
                   },
                   [&](const ElemXMove& e) { moves.push_back({{"type", "elem_x"}, {"p", e.p.to_string('y')}}); },
                   [&](const ElemYMove& e) { moves.push_back({{"type", "elem_y"}, {"p", e.p.to_string('x')}}); },
               },
               m.kind());
  }
  return {{"domain", word.domain().name()},
          {"moves", moves},
          {"components", {word.first().to_string(), word.second().to_string()}}};
}

AutoWord word_from_json(const nlohmann::json& j, const CoeffDomain& domain) {
  const nlohmann::json& moves = j.is_object() ? j.at("moves") : j;
  if (!moves.is_array()) throw AutomorphismError("word JSON must be an array of moves");
  auto scalar = [&](const nlohmann::json& m, const char* key) {
    const UniPoly c = parse_unipoly(m.at(key).get<std::string>(), domain);
    if (c.degree() > 0) throw AutomorphismError(std::string("affine entry '") + key + "' must be a constant");
    return c.coefficient(0);
  };
  std::vector<Move> out;
  for (const auto& m : moves) {
    const auto type = m.at("type").get<std::string>();
    if (type == "affine") {
      out.push_back(Move::affine(scalar(m, "a"), scalar(m, "b"), scalar(m, "c"), scalar(m, "d"), scalar(m, "e"),
                                 scalar(m, "f")));
    } else if (type == "elem_x") {
      out.push_back(Move::elem_x(parse_unipoly(m.at("p").get<std::string>(), domain, 'y')));
    } else if (type == "elem_y") {
      out.push_back(Move::elem_y(parse_unipoly(m.at("p").get<std::string>(), domain, 'x')));
    } else {
      throw AutomorphismError("unknown move type '" + type + "'");
    }
  }
  return AutoWord(domain, std::move(out));
}

}  // namespace amcurve
