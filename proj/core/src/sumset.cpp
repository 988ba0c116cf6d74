#include "subsum/sumset.hpp"

#include <bit>
#include <vector>

#include "bits.hpp"
#include "subsum/errors.hpp"

namespace subsum {

GroupSubset h_hat(const AbelianGroup& group, const GroupSubset& a, int h) {
  require_subset_of_group(group, a);
  if (h < 0) throw PreconditionError("h must be non-negative");
  const auto hu = static_cast<std::uint32_t>(h);
  if (hu > a.size()) return GroupSubset(group);

  const std::size_t nw = group.words();
  std::vector<std::vector<std::uint64_t>> dp(hu + 1, std::vector<std::uint64_t>(nw, 0));
  dp[0][0] = 1;
  std::uint32_t seen = 0;
  bits::for_each_set(a.words(), [&](std::uint32_t x) {
    ++seen;
    for (std::uint32_t j = std::min(hu, seen); j >= 1; --j) group.translate_or(dp[j - 1], x, dp[j]);
  });
  return GroupSubset::from_words(group, std::move(dp[hu]));
}

GroupSubset sigma(const AbelianGroup& group, const GroupSubset& a) {
  require_subset_of_group(group, a);
  std::vector<std::uint64_t> r(group.words(), 0);
  bits::for_each_set(a.words(), [&](std::uint32_t x) {
    group.translate_or(r, x, r);
    bits::set(r, x);
  });
  return GroupSubset::from_words(group, std::move(r));
}

GroupSubset pair_cover(const AbelianGroup& group, const GroupSubset& a) {
  return a | h_hat(group, a, 2);
}

GroupSubset naive_subset_sums(const AbelianGroup& group, const GroupSubset& a, SumMode mode,
                              std::size_t cap) {
  require_subset_of_group(group, a);
  if (a.size() > cap) {
    throw BudgetExceeded("oracle cap exceeded: |A| = " + std::to_string(a.size()) + " > " + std::to_string(cap));
  }
  const bool want_sigma = std::holds_alternative<Sigma>(mode);
  const int h = want_sigma ? 0 : std::get<HHat>(mode).h;
  if (h < 0) throw PreconditionError("h must be non-negative");

  const auto elems = a.indices();
  const std::uint64_t subsets = std::uint64_t{1} << elems.size();
  GroupSubset out(group);
  for (std::uint64_t mask = want_sigma ? 1 : 0; mask < subsets; ++mask) {
    if (!want_sigma && std::popcount(mask) != h) continue;
    GroupElement total = group.zero();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if ((mask >> i) & 1u) total = group.add(total, group.element(elems[i]));
    }
    out.insert(total);
  }
  return out;
}

}  // namespace subsum
