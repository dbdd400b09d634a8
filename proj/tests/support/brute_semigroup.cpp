#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oracles.hpp"

namespace amcurve::oracle {

BruteSemigroup brute_semigroup(const std::vector<std::uint64_t>& generators) {
  std::uint64_t g = 0;
  for (auto a : generators) g = std::gcd(g, a);
  if (g != 1) throw std::invalid_argument("brute_semigroup needs coprime generators");
  const auto [lo, hi] = std::minmax_element(generators.begin(), generators.end());
  const std::uint64_t limit = (*lo) * (*hi) + 1;

  BruteSemigroup out;
  out.generators = generators;
  out.member.assign(limit + 1, false);
  out.member[0] = true;
  for (auto a : generators) {
    for (std::uint64_t s = a; s <= limit; ++s) {
      if (out.member[s - a]) out.member[s] = true;
    }
  }
  return out;
}

std::uint64_t BruteSemigroup::conductor() const {
  std::uint64_t c = 0;
  for (std::uint64_t s = 0; s < member.size(); ++s) {
    if (!member[s]) c = s + 1;
  }
  return c;
}

std::uint64_t BruteSemigroup::genus() const { return gaps().size(); }

std::vector<std::uint64_t> BruteSemigroup::gaps() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < member.size(); ++s) {
    if (!member[s]) out.push_back(s);
  }
  return out;
}

std::vector<std::uint64_t> to_u64(const std::vector<Integer>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.get_ui());
  return out;
}

std::vector<Integer> to_integers(const std::vector<std::uint64_t>& v) {
  std::vector<Integer> out;
  for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

}  // namespace amcurve::oracle
