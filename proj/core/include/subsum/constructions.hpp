#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subsum/group.hpp"
#include "subsum/subset.hpp"
#include "subsum/verdict.hpp"

namespace subsum {

struct Claim {
  std::string name;
  Json expected;
  Json observed;
  bool holds = false;
};

/// A generated (group, subset) pair together with the properties it was
/// built to exhibit. Every claim has already been checked; constructors
/// throw ClaimViolation instead of returning a failing instance.
struct Construction {
  std::string name;
  AbelianGroup group;
  GroupSubset subset;
  Json params = Json::object();
  std::vector<Claim> claims;
};

// Z_{3k} with S = {1} u {3, 6, ..., 3(k-1)}: |S| = k, S generates, 0 not in S,
// and |sigma(S)| = 2k. Requires k >= 3.
Construction tight_example(std::uint32_t k);

// Z_m with A = {1, ..., m/2}; 0 is missing from A u 2^A. Requires even m >= 4.
Construction even_counterexample(std::uint32_t m);

// Z_m with A = {1..(m-2)/4} u {m/2..(3m-2)/4}; both 0 and m/2 - 1 are missing
// from A u 2^A. Requires m = 2 mod 4 and m >= 6.
Construction two_mod_four_counterexample(std::uint32_t m);

/// A = (G_2 \ {0}) u K where K takes, from each pair {x, -x} with x != -x,
/// the member of smaller index. Then 2|A| = |G| + |G_2| - 2 and A u 2^A != G.
Construction near_tight_construction(const AbelianGroup& group);

Json to_json(const Construction& construction);

}  // namespace subsum
