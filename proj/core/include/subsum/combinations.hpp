#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace subsum {

// C(n, k), throwing BudgetExceeded if it does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Colexicographic order on k-subsets of {0..n-1}, each stored ascending:
// rank(c) = sum_i C(c[i], i + 1). Rank 0 is {0, 1, ..., k-1}.
std::uint64_t colex_rank(std::span<const std::uint32_t> combination);
std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t k);

/// Advances to the colex successor within {0..n-1}. Returns the highest
/// position that changed (positions 0..j were rewritten), or -1 when the
/// last combination has been passed.
int colex_next(std::span<std::uint32_t> combination, std::uint32_t n);

}  // namespace subsum
