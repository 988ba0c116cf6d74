#include "subsum/combinations.hpp"

#include <numeric>
#include <string>

#include "subsum/errors.hpp"

namespace subsum {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is exact; dividing out gcd(r, i) first keeps it exact.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(r / g, factor, &r)) {
      throw BudgetExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
    }
  }
  return r;
}

std::uint64_t colex_rank(std::span<const std::uint32_t> combination) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < combination.size(); ++i) r += binomial(combination[i], i + 1);
  return r;
}

std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t k) {
  std::vector<std::uint32_t> out(k);
  for (std::uint32_t i = k; i >= 1; --i) {
    // largest c with C(c, i) <= rank
    std::uint32_t c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    out[i - 1] = c;
    rank -= binomial(c, i);
  }
  return out;
}

int colex_next(std::span<std::uint32_t> combination, std::uint32_t n) {
  const std::size_t k = combination.size();
  if (k == 0) return -1;
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint32_t limit = (j + 1 < k) ? combination[j + 1] : n;
    if (combination[j] + 1 < limit) {
      ++combination[j];
      for (std::size_t i = 0; i < j; ++i) combination[i] = static_cast<std::uint32_t>(i);
      return static_cast<int>(j);
    }
  }
  return -1;
}

}  // namespace subsum
