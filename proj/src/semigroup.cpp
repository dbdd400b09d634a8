#include "amcurve/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace amcurve {

namespace {

constexpr std::uint64_t kMaxTable = std::uint64_t{1} << 31U;

}  // namespace

std::uint64_t to_u64(const Integer& value) {
  if (value < 0 || !value.fits_ulong_p()) {
    throw SemigroupError("value " + value.get_str() + " does not fit a 64-bit table index");
  }
  return value.get_ui();
}

NumericalSemigroup NumericalSemigroup::generate(std::span<const Integer> generators,
                                                std::uint64_t min_bound) {
  std::vector<std::uint64_t> small;
  small.reserve(generators.size());
  for (const Integer& g : generators) small.push_back(to_u64(g));
  return generate(small, min_bound);
}

NumericalSemigroup NumericalSemigroup::generate(std::span<const std::uint64_t> generators,
                                                std::uint64_t min_bound) {
  if (generators.empty()) throw SemigroupError("no generators");
  NumericalSemigroup s;
  s.generators_.assign(generators.begin(), generators.end());
  std::sort(s.generators_.begin(), s.generators_.end());
  s.generators_.erase(std::unique(s.generators_.begin(), s.generators_.end()), s.generators_.end());
  if (s.generators_.front() == 0) throw SemigroupError("generators must be positive");

  s.gcd_ = 0;
  for (auto g : s.generators_) s.gcd_ = std::gcd(s.gcd_, g);

  const std::uint64_t smallest = s.generators_.front();
  const std::uint64_t largest = s.generators_.back();

  if (s.gcd_ != 1) {
    const std::uint64_t second = s.generators_.size() > 1 ? s.generators_[1] : smallest;
    s.extend_table(std::max(min_bound, largest + smallest * second));
    return s;
  }

  // Grow until a run of `smallest` consecutive members appears.
  std::uint64_t target = std::max<std::uint64_t>(2 * largest, 64);
  for (;;) {
    s.extend_table(target);
    std::uint64_t run = 0;
    std::optional<std::uint64_t> run_start;
    for (std::uint64_t v = 0; v <= s.bound_; ++v) {
      if (s.member_[v]) {
        if (run == 0) run_start = v;
        if (++run == smallest) break;
      } else {
        run = 0;
      }
    }
    if (run == smallest) {
      s.conductor_ = *run_start;
      break;
    }
    if (target >= kMaxTable) throw SemigroupError("semigroup table exceeds size limit");
    target *= 2;
  }
  s.extend_table(std::max(min_bound, *s.conductor_ + largest));
  return s;
}

void NumericalSemigroup::extend_table(std::uint64_t new_bound) {
  if (new_bound > kMaxTable) throw SemigroupError("semigroup table exceeds size limit");
  if (!member_.empty() && new_bound <= bound_) return;
  const std::uint64_t old_size = member_.size();
  member_.resize(new_bound + 1, false);
  for (std::uint64_t v = old_size; v <= new_bound; ++v) {
    if (v == 0) {
      member_[0] = true;
      continue;
    }
    for (auto g : generators_) {
      if (g > v) break;
      if (member_[v - g]) {
        member_[v] = true;
        break;
      }
    }
  }
  bound_ = new_bound;
}

bool NumericalSemigroup::contains(std::uint64_t s) const {
  if (s <= bound_) return member_[s];
  if (conductor_) return true;
  throw SemigroupError("membership of " + std::to_string(s) + " beyond table bound " +
                       std::to_string(bound_) + " with gcd " + std::to_string(gcd_));
}

std::uint64_t NumericalSemigroup::conductor() const {
  if (!conductor_) {
    throw SemigroupError("generators have gcd " + std::to_string(gcd_) + "; gap set is infinite");
  }
  return *conductor_;
}

SemigroupInvariants NumericalSemigroup::invariants() const {
  SemigroupInvariants inv;
  inv.conductor = conductor();
  for (std::uint64_t v = 0; v < inv.conductor; ++v) {
    if (!member_[v]) inv.gaps.push_back(v);
  }
  inv.genus = inv.gaps.size();
  inv.frobenius = inv.gaps.empty() ? -1 : static_cast<std::int64_t>(inv.gaps.back());

  // A generator is redundant iff it is a sum of two nonzero members.
  for (auto g : generators_) {
    bool decomposable = false;
    for (std::uint64_t a = 1; a <= g / 2 && !decomposable; ++a) {
      decomposable = member_[a] && member_[g - a];
    }
    if (!decomposable) inv.minimal_generators.push_back(g);
  }
  return inv;
}

std::vector<std::uint64_t> NumericalSemigroup::members_up_to(std::uint64_t up_to) const {
  if (up_to > bound_) {
    throw SemigroupError("requested " + std::to_string(up_to) + " beyond table bound " +
                         std::to_string(bound_));
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v <= up_to; ++v) {
    if (member_[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> recover_sequence(const NumericalSemigroup& g, std::uint64_t r0) {
  const std::uint64_t c = g.conductor();
  if (r0 == 0) throw SemigroupError("initial term must be positive");
  const std::uint64_t window = c + r0;
  if (window > g.bound() + 1) {
    throw SemigroupError("table bound " + std::to_string(g.bound()) + " too small to recover from r0 = " +
                         std::to_string(r0) + " (need " + std::to_string(window - 1) + ")");
  }
  if (!g.contains(r0)) throw SemigroupError(std::to_string(r0) + " is not a member of the semigroup");

  std::vector<std::uint64_t> seq{r0};
  std::vector<bool> partial(window, false);
  partial[0] = true;
  auto add_generator = [&](std::uint64_t gen) {
    for (std::uint64_t v = gen; v < window; ++v) {
      if (partial[v - gen]) partial[v] = true;
    }
  };
  add_generator(r0);
  for (;;) {
    std::optional<std::uint64_t> missing;
    for (std::uint64_t v = 0; v < window; ++v) {
      if (g.contains(v) && !partial[v]) {
        missing = v;
        break;
      }
    }
    if (!missing) break;
    seq.push_back(*missing);
    add_generator(*missing);
  }
  return seq;
}

}  // namespace amcurve
