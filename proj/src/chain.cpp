#include "amcurve/chain.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace amcurve {

namespace {

std::int64_t to_i64(const Integer& v) {
  if (!v.fits_slong_p()) throw ChainError("value " + v.get_str() + " exceeds 64-bit degree range");
  return v.get_si();
}

std::vector<Monomial> monomials_up_to(std::uint32_t degree_bound) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d <= degree_bound; ++d) {
    for (std::uint32_t x = d + 1; x-- > 0;) out.push_back({x, d - x});
  }
  return out;
}

}  // namespace

std::int64_t IntersectionNumber::value() const {
  if (!value_) throw std::logic_error("intersection number is infinite");
  return *value_;
}

std::string IntersectionNumber::to_string() const {
  return value_ ? std::to_string(*value_) : "inf";
}

Parametrization parametrize(const AutoWord& witness) {
  const CoeffDomain& dom = witness.domain();
  const UniPoly t = UniPoly::variable(dom);
  auto [xt, yt] = witness.inverse().apply(UniPoly(dom), t);
  Parametrization param{std::move(xt), std::move(yt)};
  if (!substitute(witness.first(), param.x, param.y).is_zero()) {
    throw ChainError("parametrization does not lie on " + witness.first().to_string());
  }
  if (!(substitute(witness.second(), param.x, param.y) == t)) {
    throw ChainError("partner " + witness.second().to_string() + " does not pull back to t");
  }
  return param;
}

IntersectionNumber bezout_intersection(const BiPoly& h, std::int64_t curve_degree, const Parametrization& param) {
  if (h.is_zero()) throw std::invalid_argument("intersection with the zero polynomial");
  const UniPoly pulled = substitute(h, param.x, param.y);
  if (pulled.is_zero()) return IntersectionNumber::infinite();
  const std::int64_t value = curve_degree * h.degree().value() - pulled.degree().value();
  if (value < 0) {
    throw ChainError("negative intersection number for " + h.to_string() + "; parametrization degree exceeds " +
                     std::to_string(curve_degree));
  }
  return IntersectionNumber(value);
}

// ---------------------------------------------------------------------------
// ChainAtInfinity

std::vector<std::int64_t> ChainAtInfinity::degrees() const {
  std::vector<std::int64_t> out;
  for (const auto& p : polys_) out.push_back(p.degree().value());
  return out;
}

std::vector<Integer> ChainAtInfinity::realized_sequence() const {
  const Integer n = dchain_.front();
  std::vector<Integer> r{n};
  for (std::size_t k = 0; k + 1 < dchain_.size(); ++k) {
    r.push_back(n * n / Integer(dchain_[k]) - Integer(dchain_[k + 1]));
  }
  return r;
}

void ChainAtInfinity::finish_and_validate() {
  const std::size_t h = polys_.size() - 1;
  if (pair_witnesses_.size() != h) throw ChainError("chain needs one witness per consecutive pair");

  const std::int64_t n = polys_.back().degree().value();
  ratios_.clear();
  dchain_.clear();
  for (std::size_t k = 0; k < polys_.size(); ++k) {
    const std::int64_t dk = polys_[k].degree().value();
    if (dk < 1 || n % dk != 0) throw ChainError("deg f_k must divide deg f_{h+1}");
    dchain_.push_back(n / dk);
    if (k + 1 < polys_.size()) {
      const std::int64_t next = polys_[k + 1].degree().value();
      if (next % dk != 0 || next / dk < 2) {
        throw ChainError("consecutive degrees must grow by an integer factor >= 2");
      }
      ratios_.push_back(next / dk);
    }
  }
  if (polys_.front().degree() != 1) throw ChainError("deg f_1 must be 1");

  for (std::size_t k = 0; k < h; ++k) {
    if (!(pair_witnesses_[k].first() == polys_[k + 1]) || !(pair_witnesses_[k].second() == polys_[k])) {
      throw ChainError("pair witness " + std::to_string(k + 1) + " does not have components (f_{k+1}, f_k)");
    }
  }

  param_ = parametrize(pair_witnesses_.back());
  if (std::max(param_.x.degree(), param_.y.degree()) != Degree(n)) {
    throw ChainError("parametrization degree differs from deg f_{h+1}");
  }
  for (std::size_t k = 0; k < h; ++k) {
    const Degree pulled = substitute(polys_[k], param_.x, param_.y).degree();
    if (pulled != Degree(dchain_[k + 1])) {
      throw ChainError("deg_t f_" + std::to_string(k + 1) + "(x(t), y(t)) = " + pulled.to_string() +
                       ", expected d_" + std::to_string(k + 2) + " = " + std::to_string(dchain_[k + 1]));
    }
  }
}

ChainAtInfinity build_chain(const AmSequence& r, const CoeffDomain& domain) {
  const CharSequence& seq = r.sequence();
  if (seq.initial() <= 1) throw InvalidSequence("realization needs initial term > 1, got " + seq.initial().get_str());

  const Scalar zero = Scalar::zero(domain);
  const Scalar one = Scalar::one(domain);
  const BiPoly x = BiPoly::x(domain);
  const BiPoly y = BiPoly::y(domain);

  ChainAtInfinity chain;
  chain.domain_ = domain;
  const std::size_t h = seq.length();
  std::vector<std::uint64_t> ratios;
  for (std::size_t k = 1; k <= h; ++k) ratios.push_back(static_cast<std::uint64_t>(to_i64(seq.n(k))));

  chain.polys_.push_back(y);
  chain.polys_.push_back(y.pow(ratios[0]) - x);
  for (std::size_t k = 2; k <= h; ++k) {
    chain.polys_.push_back(chain.polys_[k - 1].pow(ratios[k - 1]) - chain.polys_[k - 2]);
  }

  // (x, y) -> (-x, y) -> (y^{n_1} - x, y), then per step (X, Y) -> (-Y, X) -> (X^{n_k} - Y, X).
  AutoWord w(domain, {Move::affine(-one, zero, zero, one, zero, zero),
                      Move::elem_x(UniPoly::monomial(one, ratios[0]))});
  chain.pair_witnesses_.push_back(w);
  const Move rotate = Move::affine(zero, -one, one, zero, zero, zero);
  for (std::size_t k = 2; k <= h; ++k) {
    w = w.then(rotate).then(Move::elem_x(UniPoly::monomial(one, ratios[k - 1])));
    chain.pair_witnesses_.push_back(w);
  }

  chain.finish_and_validate();
  std::vector<Integer> dchain(chain.dchain_.begin(), chain.dchain_.end());
  if (dchain != seq.dchain()) throw ChainError("built chain does not reproduce the gcd chain of " + seq.to_string());
  return chain;
}

ChainAtInfinity chain_from_skeleton(const ChainSkeleton& skeleton) {
  if (skeleton.polys.size() < 2) throw ChainError("skeleton needs at least two polynomials");
  ChainAtInfinity chain;
  chain.domain_ = skeleton.polys.front().domain();
  chain.polys_ = skeleton.polys;
  chain.pair_witnesses_ = skeleton.pair_witnesses;
  chain.finish_and_validate();
  return chain;
}

IntersectionNumber intersection_at_infinity(const BiPoly& h, const ChainAtInfinity& chain) {
  return bezout_intersection(h, chain.degree(), chain.param());
}

// ---------------------------------------------------------------------------
// Verification

IntersectionReport verify_theorem(const ChainAtInfinity& chain, const CharSequence& r) {
  IntersectionReport rep;
  rep.sequence = r.terms();
  rep.dchain = chain.dchain();
  rep.degrees = chain.degrees();
  const std::size_t h = chain.length();
  const std::int64_t n = chain.degree();
  const auto& deg = rep.degrees;

  // Parametrizations of Gamma_2, ..., Gamma_{h+1}.
  std::vector<Parametrization> params(h + 1);
  for (std::size_t k = 2; k <= h + 1; ++k) params[k - 1] = parametrize(chain.pair_witnesses()[k - 2]);

  // i(gamma_j, gamma_k) for j < k, computed on Gamma_k.
  std::vector<std::vector<IntersectionNumber>> inter(h + 1, std::vector(h + 1, IntersectionNumber::infinite()));
  for (std::size_t k = 2; k <= h + 1; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      const auto v = bezout_intersection(chain.f(j), deg[k - 1], params[k - 1]);
      inter[j - 1][k - 1] = v;
      inter[k - 1][j - 1] = v;
    }
  }

  rep.extracted.push_back(n);
  for (std::size_t k = 1; k <= h; ++k) {
    rep.intersections.push_back(intersection_at_infinity(chain.f(k), chain));
    rep.extracted.push_back(rep.intersections.back().is_infinite() ? -1 : rep.intersections.back().value());
    rep.pairwise.push_back(inter[k - 1][k]);
  }

  rep.dlambda.assign(h + 1, std::vector<std::optional<Rational>>(h + 1));
  for (std::size_t j = 0; j <= h; ++j) {
    for (std::size_t k = 0; k <= h; ++k) {
      if (j == k || inter[j][k].is_infinite()) continue;
      Rational q(Integer(inter[j][k].value()), Integer(deg[j]) * Integer(deg[k]));
      q.canonicalize();
      rep.dlambda[j][k] = q;
    }
  }

  const bool shape_ok = r.length() == h && r.initial() == n;
  if (!shape_ok) {
    rep.failures.push_back("sequence " + r.to_string() + " has a different length or initial term than the chain");
  }

  rep.degrees_ok = shape_ok;
  for (std::size_t k = 1; shape_ok && k <= h + 1; ++k) {
    const Integer expected = Integer(n) / r.d(k);
    if (Integer(deg[k - 1]) != expected) {
      rep.degrees_ok = false;
      rep.failures.push_back("deg f_" + std::to_string(k) + " = " + std::to_string(deg[k - 1]) + " but n/d_" +
                             std::to_string(k) + " = " + expected.get_str());
    }
  }

  rep.values_ok = shape_ok;
  for (std::size_t k = 1; shape_ok && k <= h; ++k) {
    const auto& v = rep.intersections[k - 1];
    if (v.is_infinite() || Integer(v.value()) != r.r(k)) {
      rep.values_ok = false;
      rep.failures.push_back("i(gamma_" + std::to_string(k) + ", gamma) = " + v.to_string() + " but r_" +
                             std::to_string(k) + " = " + r.r(k).get_str());
    }
  }

  rep.consecutive_ok = true;
  for (std::size_t k = 1; k <= h; ++k) {
    const std::int64_t dk = rep.dchain[k - 1];
    const std::int64_t dk1 = rep.dchain[k];
    const std::int64_t expected = n * n / (dk * dk1) - 1;
    const auto& v = rep.pairwise[k - 1];
    if (v.is_infinite() || v.value() != expected) {
      rep.consecutive_ok = false;
      rep.failures.push_back("i(gamma_" + std::to_string(k) + ", gamma_" + std::to_string(k + 1) + ") = " +
                             v.to_string() + " but n^2/(d_k d_{k+1}) - 1 = " + std::to_string(expected));
    }
  }

  const UltrametricResult um = ultrametric_check(rep);
  rep.ultrametric = um.ok;
  if (!um.ok) {
    const auto& w = *um.witness;
    rep.failures.push_back("strong triangle rule fails on branches (" + std::to_string(w[0]) + ", " +
                           std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")");
  }
  return rep;
}

UltrametricResult ultrametric_check(const IntersectionReport& report) {
  const auto& m = report.dlambda;
  const std::size_t size = m.size();
  UltrametricResult out;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      for (std::size_t k = j + 1; k < size; ++k) {
        if (!m[i][j] || !m[i][k] || !m[j][k]) continue;
        std::array<Rational, 3> v{*m[i][j], *m[i][k], *m[j][k]};
        std::sort(v.begin(), v.end());
        if (v[0] != v[1]) {
          out.ok = false;
          out.witness = {i + 1, j + 1, k + 1};
          return out;
        }
      }
    }
  }
  return out;
}

bool dlambda_matches_closed_form(const IntersectionReport& report) {
  const auto& d = report.dchain;
  const auto& m = report.dlambda;
  if (m.size() != d.size()) return false;
  const Integer square = Integer(d.front()) * Integer(d.front());
  for (std::size_t j = 0; j + 1 < d.size(); ++j) {
    Rational expected(square - Integer(d[j]) * Integer(d[j + 1]), square);
    expected.canonicalize();
    for (std::size_t k = j + 1; k < d.size(); ++k) {
      if (!m[j][k] || *m[j][k] != expected) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sampling oracle

std::vector<OracleSample> sample_intersections(const Parametrization& param, std::int64_t curve_degree,
                                               std::size_t trials, std::uint32_t degree_bound,
                                               std::uint64_t seed) {
  const CoeffDomain dom = param.x.domain();
  const std::vector<Monomial> monos = monomials_up_to(degree_bound);
  std::vector<OracleSample> out;
  auto record = [&](const BiPoly& h) {
    out.push_back({h.to_string(), h.degree().value(), bezout_intersection(h, curve_degree, param)});
  };
  for (const Monomial& m : monos) record(BiPoly::monomial(Scalar::one(dom), m.x, m.y));

  // Raw engine output only, so the stream is identical on every platform.
  std::mt19937_64 rng(seed);
  static constexpr std::array<long, 4> kCoeffs{-2, -1, 1, 2};
  const std::size_t max_terms = std::min<std::size_t>(monos.size(), 5);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<std::size_t> idx(monos.size());
    std::iota(idx.begin(), idx.end(), 0);
    const std::size_t terms = 1 + rng() % max_terms;
    BiPoly h(dom);
    for (std::size_t i = 0; i < terms; ++i) {
      const std::size_t pick = i + rng() % (idx.size() - i);
      std::swap(idx[i], idx[pick]);
      const Monomial& m = monos[idx[i]];
      h += BiPoly::monomial(Scalar::from_int(kCoeffs[rng() % kCoeffs.size()], dom), m.x, m.y);
    }
    if (h.is_zero()) h = BiPoly::constant(Scalar::one(dom));
    record(h);
  }
  return out;
}

std::vector<OracleSample> semigroup_sampling_oracle(const ChainAtInfinity& chain, std::size_t trials,
                                                    std::uint32_t degree_bound, std::uint64_t seed) {
  return sample_intersections(chain.param(), chain.degree(), trials, degree_bound, seed);
}

OracleVerdict check_oracle_membership(const std::vector<OracleSample>& samples, const NumericalSemigroup& g) {
  OracleVerdict v;
  for (const auto& s : samples) {
    if (s.value.is_infinite()) {
      ++v.infinite;
      continue;
    }
    ++v.finite;
    const auto value = static_cast<std::uint64_t>(s.value.value());
    if (value == 0) v.produced_zero = true;
    if (!g.contains(value)) v.non_members.push_back(s);
  }
  return v;
}

}  // namespace amcurve
