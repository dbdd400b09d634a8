#include <algorithm>

#include "oracles.hpp"

namespace amcurve::oracle {

std::vector<std::vector<std::uint64_t>> brute_divisor_chains(std::uint64_t n) {
  std::vector<std::uint64_t> mids;  // proper divisors strictly between 1 and n
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) mids.push_back(d);
  }
  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t subsets = std::uint64_t{1} << mids.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::uint64_t> chain{n};
    for (std::size_t i = mids.size(); i-- > 0;) {
      if (mask >> i & 1) chain.push_back(mids[i]);
    }
    chain.push_back(1);
    bool ok = true;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) ok = ok && chain[k] % chain[k + 1] == 0;
    if (ok) out.push_back(chain);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> lemma_sequence(const std::vector<std::uint64_t>& chain) {
  const std::uint64_t n = chain.front();
  std::vector<std::uint64_t> r{n};
  for (std::size_t k = 1; k < chain.size(); ++k) r.push_back(n * n / chain[k - 1] - chain[k]);
  return r;
}

}  // namespace amcurve::oracle
