#pragma once

// Fixed-size exhaustive search over k-subsets of a candidate list.
//
// Combinations are visited in colex order of candidate positions. Evaluators
// keep one state per level; level t adds the element at position k-1-t, so a
// colex step that rewrites positions 0..j only recomputes levels k-1-j..k-1.
// The rank space [0, C(n,k)) is split into contiguous ranges, one per job;
// tallies merge associatively and witness pools keep, per class, the entries
// of smallest rank, so the merged result does not depend on the split.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "subsum/combinations.hpp"
#include "subsum/group.hpp"

namespace subsum::detail {

struct Observation {
  bool eligible = true;
  bool violation = false;
  bool notable = false;
  int klass = 0;
};

class WitnessPool {
 public:
  explicit WitnessPool(std::size_t cap) : cap_(cap) {}

  bool wants(int klass, std::uint64_t rank) const {
    auto it = classes_.find(klass);
    return it == classes_.end() || it->second.size() < cap_ || rank < it->second.back().rank;
  }

  void offer(int klass, std::uint64_t rank, std::vector<std::uint32_t> elements) {
    if (!wants(klass, rank)) return;
    auto& v = classes_[klass];
    auto pos = std::lower_bound(v.begin(), v.end(), rank, [](const Entry& e, std::uint64_t r) { return e.rank < r; });
    if (pos != v.end() && pos->rank == rank) return;
    v.insert(pos, Entry{rank, std::move(elements)});
    if (v.size() > cap_) v.pop_back();
  }

  void merge(WitnessPool&& other) {
    for (auto& [klass, entries] : other.classes_) {
      for (auto& e : entries) offer(klass, e.rank, std::move(e.elements));
    }
  }

  std::vector<std::vector<std::uint32_t>> flatten(bool descending_class) const {
    std::vector<std::vector<std::uint32_t>> out;
    auto emit = [&](const std::vector<Entry>& v) {
      for (const auto& e : v) out.push_back(e.elements);
    };
    if (descending_class) {
      for (auto it = classes_.rbegin(); it != classes_.rend(); ++it) emit(it->second);
    } else {
      for (const auto& [klass, v] : classes_) emit(v);
    }
    return out;
  }

 private:
  struct Entry {
    std::uint64_t rank;
    std::vector<std::uint32_t> elements;
  };
  std::size_t cap_;
  std::map<int, std::vector<Entry>> classes_;
};

/// Automorphisms x -> u*x of Z_n for units u. Applicable only when the
/// candidate list is closed under them.
class UnitSymmetry {
 public:
  static std::optional<UnitSymmetry> make(const AbelianGroup& group, std::span<const std::uint32_t> candidates) {
    if (!group.is_cyclic() || group.order() < 3) return std::nullopt;
    const std::uint32_t n = group.order();
    UnitSymmetry sym;
    sym.n_ = n;
    for (std::uint32_t u = 1; u < n; ++u) {
      if (std::gcd(u, n) == 1) sym.units_.push_back(u);
    }
    std::vector<bool> in(n, false);
    for (auto c : candidates) in[c] = true;
    for (auto c : candidates) {
      for (auto u : sym.units_) {
        if (!in[mul(u, c, n)]) return std::nullopt;
      }
    }
    return sym;
  }

  std::size_t unit_count() const { return units_.size(); }

  // Canonical iff no image is colex-smaller; returns the orbit size, or 0 if
  // the set is not the orbit's representative.
  std::uint64_t orbit_size_if_canonical(std::span<const std::uint32_t> elems, std::vector<std::uint32_t>& scratch) const {
    std::uint64_t stabilizer = 0;
    for (auto u : units_) {
      image(u, elems, scratch);
      const int cmp = colex_compare(scratch, elems);
      if (cmp < 0) return 0;
      if (cmp == 0) ++stabilizer;
    }
    return units_.size() / stabilizer;
  }

  std::vector<std::vector<std::uint32_t>> orbit(std::span<const std::uint32_t> elems) const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> img;
    for (auto u : units_) {
      image(u, elems, img);
      out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  static std::uint32_t mul(std::uint32_t u, std::uint32_t x, std::uint32_t n) {
    return static_cast<std::uint32_t>((std::uint64_t{u} * x) % n);
  }

  void image(std::uint32_t u, std::span<const std::uint32_t> elems, std::vector<std::uint32_t>& out) const {
    out.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) out[i] = mul(u, elems[i], n_);
    std::sort(out.begin(), out.end());
  }

  static int colex_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> units_;
};

struct SearchTally {
  explicit SearchTally(std::size_t cap) : violation_pool(cap), notable_pool(cap) {}

  std::uint64_t checked = 0;
  std::uint64_t eligible = 0;
  std::uint64_t violations = 0;
  std::uint64_t notables = 0;
  std::uint64_t representatives = 0;
  std::map<int, std::uint64_t> violation_classes;
  std::optional<std::uint64_t> first_violation_rank;
  std::vector<std::uint32_t> first_violation;
  WitnessPool violation_pool;
  WitnessPool notable_pool;

  void merge(SearchTally&& o) {
    checked += o.checked;
    eligible += o.eligible;
    violations += o.violations;
    notables += o.notables;
    representatives += o.representatives;
    for (auto [k, n] : o.violation_classes) violation_classes[k] += n;
    if (o.first_violation_rank && (!first_violation_rank || *o.first_violation_rank < *first_violation_rank)) {
      first_violation_rank = o.first_violation_rank;
      first_violation = std::move(o.first_violation);
    }
    violation_pool.merge(std::move(o.violation_pool));
    notable_pool.merge(std::move(o.notable_pool));
  }
};

struct SearchConfig {
  std::size_t witness_cap = 16;
  bool symmetry = false;
  unsigned jobs = 1;
  // Stop at the colex-first violation; counts then cover ranks up to it.
  bool stop_at_first_violation = false;
};

/// Runs `Evaluator` over every `size`-subset of `candidates` (ascending
/// element indices). `make_eval()` must return a fresh evaluator exposing
/// push(level, element) and observe().
template <class MakeEvaluator>
SearchTally run_search(const AbelianGroup& group, std::span<const std::uint32_t> candidates, std::uint32_t size,
                       const SearchConfig& config, MakeEvaluator make_eval, bool* symmetry_applied = nullptr) {
  const auto n = static_cast<std::uint32_t>(candidates.size());
  const std::uint64_t total = binomial(n, size);

  std::optional<UnitSymmetry> sym;
  if (config.symmetry) sym = UnitSymmetry::make(group, candidates);
  if (symmetry_applied != nullptr) *symmetry_applied = sym.has_value();

  std::vector<std::int64_t> pos_of(group.order(), -1);
  for (std::uint32_t i = 0; i < n; ++i) pos_of[candidates[i]] = i;

  std::atomic<std::uint64_t> best_first{std::numeric_limits<std::uint64_t>::max()};

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    SearchTally tally(config.witness_cap);
    if (lo >= hi) return tally;
    auto eval = make_eval();
    auto comb = colex_unrank(lo, size);
    std::vector<std::uint32_t> elems(size), scratch, positions(size);
    std::uint32_t valid = 0;
    for (std::uint64_t r = lo; r < hi; ++r) {
      if (r > lo) {
        const int j = colex_next(comb, n);
        valid = std::min<std::uint32_t>(valid, size - 1 - static_cast<std::uint32_t>(j));
      }
      if (config.stop_at_first_violation && r > best_first.load(std::memory_order_relaxed)) break;
      for (std::uint32_t i = 0; i < size; ++i) elems[i] = candidates[comb[i]];

      std::uint64_t weight = 1;
      if (sym) {
        weight = sym->orbit_size_if_canonical(elems, scratch);
        if (weight == 0) continue;
      }
      for (std::uint32_t t = valid; t < size; ++t) eval.push(t, elems[size - 1 - t]);
      valid = size;

      const Observation obs = eval.observe();
      tally.checked += weight;
      tally.representatives += 1;
      if (obs.eligible) tally.eligible += weight;

      auto record = [&](WitnessPool& pool) {
        if (!sym) {
          if (pool.wants(obs.klass, r)) pool.offer(obs.klass, r, elems);
          return;
        }
        for (auto& member : sym->orbit(elems)) {
          for (std::uint32_t i = 0; i < size; ++i) positions[i] = static_cast<std::uint32_t>(pos_of[member[i]]);
          pool.offer(obs.klass, colex_rank(positions), std::move(member));
        }
      };

      if (obs.violation) {
        tally.violations += weight;
        tally.violation_classes[obs.klass] += weight;
        record(tally.violation_pool);
        if (config.stop_at_first_violation) {
          tally.first_violation_rank = r;
          tally.first_violation = elems;
          std::uint64_t cur = best_first.load();
          while (r < cur && !best_first.compare_exchange_weak(cur, r)) {
          }
          break;
        }
      }
      if (obs.notable) {
        tally.notables += weight;
        record(tally.notable_pool);
      }
    }
    return tally;
  };

  const unsigned jobs = std::max(1u, config.jobs);
  SearchTally result(config.witness_cap);
  if (jobs == 1 || total < 2) {
    result = run_range(0, total);
  } else {
    const std::uint64_t chunks = std::min<std::uint64_t>(jobs, total);
    std::vector<std::optional<SearchTally>> parts(chunks);
    std::vector<std::thread> workers;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = total / chunks * c + std::min(c, total % chunks);
      const std::uint64_t hi = lo + total / chunks + (c < total % chunks ? 1 : 0);
      workers.emplace_back([&, c, lo, hi] { parts[c].emplace(run_range(lo, hi)); });
    }
    for (auto& w : workers) w.join();
    for (auto& p : parts) result.merge(std::move(*p));
  }

  if (config.stop_at_first_violation && result.first_violation_rank) {
    // Sequential semantics: everything up to and including the first failure.
    result.checked = *result.first_violation_rank + 1;
    result.violations = 1;
    result.violation_classes.clear();
    result.violation_pool = WitnessPool(config.witness_cap);
    result.violation_pool.offer(0, *result.first_violation_rank, result.first_violation);
  }
  return result;
}

}  // namespace subsum::detail
