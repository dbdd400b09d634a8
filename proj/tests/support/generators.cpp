#include "oracles.hpp"

namespace amcurve::oracle {

Scalar random_scalar(std::mt19937_64& rng, const CoeffDomain& dom, bool nonzero) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  for (;;) {
    Scalar s = dom.is_rational() ? Scalar::from_rational(Rational(num(rng), den(rng)), dom)
                                 : Scalar::from_int(num(rng), dom);
    if (!nonzero || !s.is_zero()) return s;
  }
}

UniPoly random_unipoly(std::mt19937_64& rng, const CoeffDomain& dom, std::uint64_t max_degree) {
  UniPoly p(dom);
  for (std::uint64_t e = 0; e <= max_degree; ++e) p += UniPoly::monomial(random_scalar(rng, dom), e);
  return p;
}

BiPoly random_bipoly(std::mt19937_64& rng, const CoeffDomain& dom, std::uint32_t max_degree, std::size_t terms) {
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  BiPoly p(dom);
  for (std::size_t i = 0; i < terms; ++i) {
    const std::uint32_t total = deg(rng);
    const std::uint32_t a = std::uniform_int_distribution<std::uint32_t>(0, total)(rng);
    p += BiPoly::monomial(random_scalar(rng, dom), a, total - a);
  }
  return p;
}

Move random_move(std::mt19937_64& rng, const CoeffDomain& dom, std::uint64_t max_elem_degree) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      for (;;) {
        const Scalar a = random_scalar(rng, dom), b = random_scalar(rng, dom);
        const Scalar c = random_scalar(rng, dom), d = random_scalar(rng, dom);
        if ((a * d - b * c).is_zero()) continue;
        return Move::affine(a, b, c, d, random_scalar(rng, dom), random_scalar(rng, dom));
      }
    default: {
      const auto top = std::uniform_int_distribution<std::uint64_t>(2, max_elem_degree)(rng);
      UniPoly p = random_unipoly(rng, dom, top - 1) + UniPoly::monomial(random_scalar(rng, dom, true), top);
      return std::uniform_int_distribution<int>(0, 1)(rng) ? Move::elem_x(p) : Move::elem_y(p);
    }
  }
}

AutoWord random_word(std::mt19937_64& rng, const CoeffDomain& dom, std::size_t length, std::uint64_t max_elem_degree) {
  std::vector<Move> moves;
  for (std::size_t i = 0; i < length; ++i) moves.push_back(random_move(rng, dom, max_elem_degree));
  return AutoWord(dom, std::move(moves));
}

std::vector<std::uint64_t> random_divisor_chain(std::mt19937_64& rng, std::uint64_t n) {
  std::vector<std::uint64_t> chain{n};
  while (chain.back() > 1) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t d = 1; d < chain.back(); ++d) {
      if (chain.back() % d == 0) next.push_back(d);
    }
    chain.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  return chain;
}

}  // namespace amcurve::oracle
