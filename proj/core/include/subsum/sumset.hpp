#pragma once

#include <cstddef>
#include <variant>

#include "subsum/group.hpp"
#include "subsum/subset.hpp"

namespace subsum {

inline constexpr std::size_t kDefaultOracleCap = 20;

/// Sums of all h-element subsets of A (distinct elements, no repetition).
///
/// h == 0 yields {0}, the sum of the empty subset; h > |A| yields the empty
/// set. Elements of A are folded in increasing index order through layers
/// dp[0..h] with dp[j] |= dp[j-1] + a. A may contain 0.
GroupSubset h_hat(const AbelianGroup& group, const GroupSubset& a, int h);

/// All nonempty subset sums of A: R <- R u (R + a) u {a} for each a in A.
GroupSubset sigma(const AbelianGroup& group, const GroupSubset& a);

/// A u h_hat(A, 2).
GroupSubset pair_cover(const AbelianGroup& group, const GroupSubset& a);

struct HHat {
  int h = 0;
};
struct Sigma {};
using SumMode = std::variant<HHat, Sigma>;

// Reference implementation by explicit enumeration of every subset of A with
// element-wise group addition. Throws BudgetExceeded when |A| > cap.
GroupSubset naive_subset_sums(const AbelianGroup& group, const GroupSubset& a, SumMode mode,
                              std::size_t cap = kDefaultOracleCap);

}  // namespace subsum
