#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "subsum/group.hpp"
#include "subsum/verdict.hpp"

namespace subsum {

inline constexpr std::uint32_t kDefaultBudget = 24;
inline constexpr std::size_t kDefaultWitnessCap = 16;

struct VerifyOptions {
  // Witnesses kept per witness class (e.g. per number of uncovered elements).
  std::size_t witness_cap = kDefaultWitnessCap;
  // Reduce by unit multiplication on cyclic groups; other groups run unreduced.
  bool symmetry = false;
  unsigned jobs = 1;
  // Largest group order accepted by the exhaustive verifiers.
  std::uint32_t budget = kDefaultBudget;
};

/// Every A in G\{0} with |A| = (|G| + |G_2|)/2 satisfies A u 2^A = G.
/// Larger A follow by monotonicity. Vacuous when that size exceeds |G| - 1.
Verdict verify_pair_cover_threshold(const AbelianGroup& group, const VerifyOptions& options = {});

/// Searches A in Z_m\{0} with |A| = ceil(m/2) for A u 2^A != Z_m. With
/// `exhaustive`, every size from ceil(m/2) to m - 1 is scanned as well.
/// Witnesses are grouped by the number of uncovered elements, largest first.
Verdict search_lemma2_counterexamples(std::uint32_t m, bool exhaustive = false,
                                      const VerifyOptions& options = {});

/// For every generating S in G\{0} with |S| >= min_size, checks
/// |sigma(S)| >= min(|G|, 2|S|). Equality cases |sigma(S)| = 2|S| < |G| are
/// reported as witnesses of a verified run, grouped by |S|.
Verdict verify_subset_sum_bound(const AbelianGroup& group, std::uint32_t min_size = 5,
                                const VerifyOptions& options = {});

struct CriticalNumberResult {
  std::uint32_t value = 0;
  Verdict verdict;
};

/// Least s such that every s-subset of G\{0} has full subset sums. Sizes
/// below s stop at their colex-first failing set; the one for s - 1 is the
/// verdict's witness. Throws NoCriticalNumber if no s <= |G| - 1 works.
CriticalNumberResult critical_number(const AbelianGroup& group, const VerifyOptions& options = {});

// Tabulated critical number for groups of order 2k, k >= 2; nullopt elsewhere.
std::optional<std::uint32_t> expected_critical_number(const AbelianGroup& group);

/// Every A in Z_m (0 allowed) with |A| = m/2 + 1 has 3^A = Z_m. Even m >= 12.
Verdict verify_three_fold_cover(std::uint32_t m, const VerifyOptions& options = {});

// Certificate form of near_tight_construction for sweeps.
Verdict near_tight_verdict(const AbelianGroup& group);

struct OrderRange {
  std::uint32_t first = 1;
  std::uint32_t last = 1;
};

struct SweepOptions {
  VerifyOptions verify;
  bool cyclic_only = false;
  std::uint32_t min_size = 5;
  bool exhaustive = false;
};

// "prop3.1", "prop3.2", "lemma2-search", "thm1", "thm4", "thm5", "thm6".
std::span<const std::string_view> statement_ids();

/// Runs one statement over every order in the range: all isomorphism classes
/// for group-wide statements, Z_n for the cyclic ones. Orders where the
/// statement does not apply are skipped.
std::vector<Verdict> sweep(std::string_view statement_id, OrderRange range, const SweepOptions& options = {});

}  // namespace subsum
