#pragma once

// Small random generators for property tests. Seeds are fixed so failures
// reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "subsum/group.hpp"
#include "subsum/subset.hpp"

namespace gen {

inline std::vector<subsum::AbelianGroup> groups_up_to(std::uint32_t n) {
  std::vector<subsum::AbelianGroup> out;
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (auto& g : subsum::enumerate_groups_of_order(k)) out.push_back(g);
  }
  return out;
}

// Each element kept independently with probability `p`.
inline subsum::GroupSubset random_subset(std::mt19937_64& rng, const subsum::AbelianGroup& g, double p) {
  std::bernoulli_distribution keep(p);
  subsum::GroupSubset s(g);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (keep(rng)) s.insert(x);
  }
  return s;
}

// Uniform subset of exactly k elements drawn from the given pool.
inline subsum::GroupSubset random_k_subset(std::mt19937_64& rng, const subsum::AbelianGroup& g,
                                           std::vector<std::uint32_t> pool, std::uint32_t k) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  return subsum::GroupSubset::from_indices(g, pool);
}

inline std::vector<std::uint32_t> nonzero(const subsum::AbelianGroup& g) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t x = 1; x < g.order(); ++x) v.push_back(x);
  return v;
}

}  // namespace gen
