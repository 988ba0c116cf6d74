#include "subsum/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>

#include "bits.hpp"
#include "search.hpp"
#include "subsum/constructions.hpp"
#include "subsum/errors.hpp"
#include "subsum/subset.hpp"
#include "subsum/sumset.hpp"

namespace subsum {

namespace {

using detail::Observation;
using detail::SearchConfig;
using detail::SearchTally;

// Layered restricted-sumset DP; layer j of a level holds the j-fold sums of
// the elements pushed so far. The cover is either the union of layers 1..H
// (A u 2^A for H = 2) or layer H alone (3^A for H = 3).
class LayerCoverEval {
 public:
  LayerCoverEval(const AbelianGroup& g, std::uint32_t size, std::uint32_t layers, bool union_cover)
      : g_(g), nw_(g.words()), size_(size), layers_(layers), union_(union_cover),
        state_((size + 1) * layers * nw_, 0), cover_(nw_) {}

  void push(std::uint32_t t, std::uint32_t a) {
    const auto src = level(t);
    const auto dst = level(t + 1);
    std::copy(src.begin(), src.end(), dst.begin());
    for (std::uint32_t j = layers_; j >= 2; --j) g_.translate_or(layer(src, j - 1), a, layer(dst, j));
    bits::set(layer(dst, 1), a);
  }

  Observation observe() {
    const auto top = level(size_);
    std::fill(cover_.begin(), cover_.end(), 0);
    if (union_) {
      for (std::uint32_t j = 1; j <= layers_; ++j) bits::or_into(cover_, layer(top, j));
    } else {
      bits::or_into(cover_, layer(top, layers_));
    }
    const auto missing = static_cast<int>(g_.order() - bits::popcount(cover_));
    return {true, missing > 0, false, missing};
  }

 private:
  std::span<std::uint64_t> level(std::uint32_t t) {
    return std::span(state_).subspan(t * layers_ * nw_, layers_ * nw_);
  }
  std::span<std::uint64_t> layer(std::span<std::uint64_t> lvl, std::uint32_t j) const {
    return lvl.subspan((j - 1) * nw_, nw_);
  }

  const AbelianGroup& g_;
  std::size_t nw_;
  std::uint32_t size_;
  std::uint32_t layers_;
  bool union_;
  std::vector<std::uint64_t> state_;
  std::vector<std::uint64_t> cover_;
};

// Subset sums R' = R u (R + a) u {a}; with `track_subgroup`, also the
// generated subgroup H' = H + <a>, and observations test the size bound.
class SigmaEval {
 public:
  SigmaEval(const AbelianGroup& g, std::uint32_t size, bool track_subgroup)
      : g_(g), nw_(g.words()), size_(size), track_(track_subgroup),
        sums_((size + 1) * nw_, 0), groups_(track_subgroup ? (size + 1) * nw_ : 0, 0), next_(nw_), acc_(nw_) {
    if (track_) {
      for (std::uint32_t t = 0; t <= size; ++t) groups_[t * nw_] = 1;
    }
  }

  void push(std::uint32_t t, std::uint32_t a) {
    auto src = slot(sums_, t);
    auto dst = slot(sums_, t + 1);
    std::copy(src.begin(), src.end(), dst.begin());
    g_.translate_or(src, a, dst);
    bits::set(dst, a);
    if (!track_) return;

    auto h = slot(groups_, t);
    auto out = slot(groups_, t + 1);
    if (bits::test(h, a)) {
      std::copy(h.begin(), h.end(), out.begin());
      return;
    }
    // Cosets H + ka are distinct until they return to H.
    std::copy(h.begin(), h.end(), acc_.begin());
    std::copy(h.begin(), h.end(), out.begin());
    while (true) {
      g_.translate(out, a, next_);
      if (std::equal(next_.begin(), next_.end(), h.begin())) break;
      bits::or_into(acc_, next_);
      std::copy(next_.begin(), next_.end(), out.begin());
    }
    std::copy(acc_.begin(), acc_.end(), out.begin());
  }

  Observation observe() {
    const std::uint32_t sums = bits::popcount(slot(sums_, size_));
    if (!track_) {
      const auto missing = static_cast<int>(g_.order() - sums);
      return {true, missing > 0, false, missing};
    }
    Observation obs;
    obs.klass = static_cast<int>(size_);
    obs.eligible = bits::popcount(slot(groups_, size_)) == g_.order();
    if (!obs.eligible) return obs;
    const std::uint64_t bound = std::min<std::uint64_t>(g_.order(), 2ull * size_);
    obs.violation = sums < bound;
    obs.notable = sums == 2ull * size_ && 2ull * size_ < g_.order();
    return obs;
  }

 private:
  std::span<std::uint64_t> slot(std::vector<std::uint64_t>& v, std::uint32_t t) {
    return std::span(v).subspan(t * nw_, nw_);
  }

  const AbelianGroup& g_;
  std::size_t nw_;
  std::uint32_t size_;
  bool track_;
  std::vector<std::uint64_t> sums_;
  std::vector<std::uint64_t> groups_;
  std::vector<std::uint64_t> next_;
  std::vector<std::uint64_t> acc_;
};

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_budget(const AbelianGroup& g, const VerifyOptions& opt) {
  if (g.order() > opt.budget) {
    throw BudgetExceeded("order " + std::to_string(g.order()) + " of " + g.to_string() +
                         " exceeds the exhaustive budget " + std::to_string(opt.budget));
  }
}

void require_options(const VerifyOptions& opt) {
  if (opt.witness_cap == 0) throw PreconditionError("witness cap must be at least 1");
}

SearchConfig config_from(const VerifyOptions& opt) {
  SearchConfig c;
  c.witness_cap = opt.witness_cap;
  c.symmetry = opt.symmetry;
  c.jobs = opt.jobs;
  return c;
}

std::vector<std::uint32_t> nonzero_elements(const AbelianGroup& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 1; x < g.order(); ++x) out.push_back(x);
  return out;
}

Verdict start(std::string statement, const AbelianGroup& g, const VerifyOptions& opt) {
  Verdict v;
  v.statement = std::move(statement);
  v.group = g.to_string();
  v.toolchain_version = toolchain_version();
  v.params["witness_cap"] = opt.witness_cap;
  v.params["symmetry"] = opt.symmetry;
  return v;
}

Json class_histogram(const std::map<int, std::uint64_t>& classes) {
  Json h = Json::object();
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) h[std::to_string(it->first)] = it->second;
  return h;
}

void note_symmetry(Verdict& v, const VerifyOptions& opt, bool applied, std::uint64_t checked,
                   std::uint64_t representatives) {
  if (!opt.symmetry) return;
  Json s = Json::object();
  s["applied"] = applied;
  s["representatives"] = representatives;
  s["expansion_factor"] = representatives == 0 ? 1.0 : static_cast<double>(checked) / static_cast<double>(representatives);
  v.summary["symmetry"] = s;
}

}  // namespace

Verdict verify_pair_cover_threshold(const AbelianGroup& group, const VerifyOptions& options) {
  Stopwatch clock;
  require_options(options);
  require_budget(group, options);
  const std::uint32_t g2 = torsion_two(group).size();
  const std::uint32_t size = (group.order() + g2) / 2;

  Verdict v = start("prop3.2", group, options);
  v.params["subset_size"] = size;
  v.params["torsion_two_size"] = g2;
  if (size > group.order() - 1) {
    v.status = Status::vacuous;
    v.summary["available_elements"] = group.order() - 1;
    note_symmetry(v, options, false, 0, 0);
    v.elapsed_ms = clock.elapsed_ms();
    return v;
  }

  const auto candidates = nonzero_elements(group);
  bool applied = false;
  auto tally = detail::run_search(group, candidates, size, config_from(options),
                                  [&] { return LayerCoverEval(group, size, 2, true); }, &applied);
  v.checked = tally.checked;
  v.violations = tally.violations;
  v.witnesses = tally.violation_pool.flatten(true);
  v.status = tally.violations > 0 ? Status::refuted : Status::verified;
  v.summary["violation_classes"] = class_histogram(tally.violation_classes);
  note_symmetry(v, options, applied, tally.checked, tally.representatives);
  v.elapsed_ms = clock.elapsed_ms();
  return v;
}

Verdict search_lemma2_counterexamples(std::uint32_t m, bool exhaustive, const VerifyOptions& options) {
  Stopwatch clock;
  require_options(options);
  if (m < 3) throw PreconditionError("lemma2 search needs m >= 3");
  const auto group = AbelianGroup::cyclic(m);
  require_budget(group, options);

  const std::uint32_t first = (m + 1) / 2;
  const std::uint32_t last = exhaustive ? m - 1 : first;
  Verdict v = start("lemma2-search", group, options);
  v.params["m"] = m;
  v.params["subset_size"] = first;
  v.params["exhaustive"] = exhaustive;

  const auto candidates = nonzero_elements(group);
  SearchTally total(options.witness_cap);
  bool applied = false;
  Json per_size = Json::array();
  for (std::uint32_t size = first; size <= last; ++size) {
    auto tally = detail::run_search(group, candidates, size, config_from(options),
                                    [&] { return LayerCoverEval(group, size, 2, true); }, &applied);
    per_size.push_back({{"size", size}, {"checked", tally.checked}, {"violations", tally.violations}});
    total.checked += tally.checked;
    total.violations += tally.violations;
    total.representatives += tally.representatives;
    for (auto [k, n] : tally.violation_classes) total.violation_classes[k] += n;
    // Witnesses come from the minimal size; larger sizes only add counts.
    if (size == first) total.violation_pool = std::move(tally.violation_pool);
  }

  v.checked = total.checked;
  v.violations = total.violations;
  v.witnesses = total.violation_pool.flatten(true);
  v.status = total.violations > 0 ? Status::refuted : Status::verified;
  v.summary["missing_histogram"] = class_histogram(total.violation_classes);
  v.summary["max_missing"] = total.violation_classes.empty() ? 0 : total.violation_classes.rbegin()->first;
  if (exhaustive) v.summary["sizes"] = per_size;
  note_symmetry(v, options, applied, total.checked, total.representatives);
  v.elapsed_ms = clock.elapsed_ms();
  return v;
}

Verdict verify_subset_sum_bound(const AbelianGroup& group, std::uint32_t min_size, const VerifyOptions& options) {
  Stopwatch clock;
  require_options(options);
  require_budget(group, options);
  Verdict v = start(group.is_cyclic() ? "thm1" : "thm6", group, options);
  v.params["min_size"] = min_size;

  const auto candidates = nonzero_elements(group);
  const auto n = static_cast<std::uint32_t>(candidates.size());
  SearchTally total(options.witness_cap);
  bool applied = false;
  for (std::uint32_t size = std::max(min_size, 1u); size <= n; ++size) {
    auto tally = detail::run_search(group, candidates, size, config_from(options),
                                    [&] { return SigmaEval(group, size, true); }, &applied);
    total.merge(std::move(tally));
  }

  v.checked = total.checked;
  v.violations = total.violations;
  v.summary["generating"] = total.eligible;
  v.summary["equality_cases"] = total.notables;
  if (total.violations > 0) {
    v.status = Status::refuted;
    v.witnesses = total.violation_pool.flatten(false);
    v.summary["witness_kind"] = "counterexample";
  } else {
    v.status = total.eligible == 0 ? Status::vacuous : Status::verified;
    v.witnesses = total.notable_pool.flatten(false);
    v.summary["witness_kind"] = "equality";
  }
  note_symmetry(v, options, applied, total.checked, total.representatives);
  v.elapsed_ms = clock.elapsed_ms();
  return v;
}

std::optional<std::uint32_t> expected_critical_number(const AbelianGroup& group) {
  const std::uint32_t order = group.order();
  if (order % 2 != 0 || order < 4) return std::nullopt;
  const std::uint32_t k = order / 2;
  const std::vector<std::uint32_t> factors(group.invariant_factors().begin(), group.invariant_factors().end());
  using F = std::vector<std::uint32_t>;
  if (k >= 5 || factors == F{2, 2, 2}) return k;
  static const std::array<F, 5> exceptional{F{4}, F{6}, F{8}, F{2, 2}, F{2, 4}};
  if (std::find(exceptional.begin(), exceptional.end(), factors) != exceptional.end()) return k + 1;
  return std::nullopt;
}

CriticalNumberResult critical_number(const AbelianGroup& group, const VerifyOptions& options) {
  Stopwatch clock;
  require_options(options);
  if (group.order() < 3) throw PreconditionError("critical number needs |G| >= 3");
  require_budget(group, options);

  Verdict v = start("thm5", group, options);
  v.params["order"] = group.order();
  const auto candidates = nonzero_elements(group);
  const auto n = static_cast<std::uint32_t>(candidates.size());

  SearchConfig config = config_from(options);
  Json sizes = Json::array();
  std::optional<std::uint32_t> value;
  std::vector<std::uint32_t> failing;
  std::uint64_t checked = 0;
  std::uint64_t reps = 0;
  bool applied = false;
  for (std::uint32_t s = 1; s <= n && !value; ++s) {
    config.stop_at_first_violation = true;
    auto tally = detail::run_search(group, candidates, s, config,
                                    [&] { return SigmaEval(group, s, false); }, &applied);
    checked += tally.checked;
    reps += tally.representatives;
    Json entry = {{"size", s}, {"checked", tally.checked}};
    if (tally.first_violation_rank) {
      entry["first_failure_rank"] = *tally.first_violation_rank;
      failing = tally.first_violation;
    } else {
      value = s;
    }
    sizes.push_back(entry);
  }
  if (!value) {
    throw NoCriticalNumber("no s <= " + std::to_string(n) + " forces full subset sums in " + group.to_string());
  }

  v.checked = checked;
  v.violations = failing.empty() ? 0 : 1;
  if (!failing.empty()) v.witnesses.push_back(failing);
  v.summary["critical_number"] = *value;
  v.summary["failing_size"] = *value - 1;
  const auto expected = expected_critical_number(group);
  if (expected) {
    v.summary["expected_value"] = *expected;
    v.summary["matches_expected"] = *expected == *value;
    v.status = *expected == *value ? Status::verified : Status::refuted;
  } else {
    v.summary["expected_value"] = nullptr;
    v.status = Status::verified;
  }
  if (v.status == Status::refuted && v.witnesses.empty()) v.witnesses.push_back({});
  v.summary["sizes"] = sizes;
  note_symmetry(v, options, applied, checked, reps);
  v.elapsed_ms = clock.elapsed_ms();
  return {*value, std::move(v)};
}

Verdict verify_three_fold_cover(std::uint32_t m, const VerifyOptions& options) {
  Stopwatch clock;
  require_options(options);
  if (m % 2 != 0 || m < 12) throw PreconditionError("three-fold cover check needs even m >= 12");
  const auto group = AbelianGroup::cyclic(m);
  require_budget(group, options);
  const std::uint32_t size = m / 2 + 1;

  Verdict v = start("thm4", group, options);
  v.params["m"] = m;
  v.params["subset_size"] = size;
  std::vector<std::uint32_t> candidates(m);
  for (std::uint32_t x = 0; x < m; ++x) candidates[x] = x;
  bool applied = false;
  auto tally = detail::run_search(group, candidates, size, config_from(options),
                                  [&] { return LayerCoverEval(group, size, 3, false); }, &applied);
  v.checked = tally.checked;
  v.violations = tally.violations;
  v.witnesses = tally.violation_pool.flatten(true);
  v.status = tally.violations > 0 ? Status::refuted : Status::verified;
  v.summary["violation_classes"] = class_histogram(tally.violation_classes);
  note_symmetry(v, options, applied, tally.checked, tally.representatives);
  v.elapsed_ms = clock.elapsed_ms();
  return v;
}

Verdict near_tight_verdict(const AbelianGroup& group) {
  Stopwatch clock;
  Verdict v;
  v.statement = "prop3.1";
  v.group = group.to_string();
  v.toolchain_version = toolchain_version();
  v.checked = 1;
  try {
    const auto c = near_tight_construction(group);
    v.params = c.params;
    v.witnesses.push_back(c.subset.indices());
    for (const auto& claim : c.claims) v.summary[claim.name] = claim.observed;
    v.status = Status::verified;
  } catch (const ClaimViolation& e) {
    v.status = Status::refuted;
    v.violations = 1;
    v.summary["error"] = e.what();
    v.witnesses.push_back({});
  }
  v.elapsed_ms = clock.elapsed_ms();
  return v;
}

std::span<const std::string_view> statement_ids() {
  static constexpr std::array<std::string_view, 7> ids{"prop3.1", "prop3.2", "lemma2-search", "thm1",
                                                       "thm4",    "thm5",    "thm6"};
  return ids;
}

std::vector<Verdict> sweep(std::string_view id, OrderRange range, const SweepOptions& options) {
  if (std::find(statement_ids().begin(), statement_ids().end(), id) == statement_ids().end()) {
    throw PreconditionError("unknown statement id '" + std::string(id) + "'");
  }
  if (range.first == 0 || range.first > range.last) throw PreconditionError("order range must satisfy 1 <= a <= b");
  const bool cyclic_statement = id == "lemma2-search" || id == "thm1" || id == "thm4";

  std::vector<Verdict> out;
  for (std::uint32_t n = range.first; n <= range.last; ++n) {
    if (id == "lemma2-search") {
      if (n >= 3) out.push_back(search_lemma2_counterexamples(n, options.exhaustive, options.verify));
      continue;
    }
    if (id == "thm4") {
      if (n % 2 == 0 && n >= 12) out.push_back(verify_three_fold_cover(n, options.verify));
      continue;
    }
    std::vector<AbelianGroup> groups;
    if (cyclic_statement || options.cyclic_only) {
      groups.push_back(AbelianGroup::cyclic(n));
    } else {
      groups = enumerate_groups_of_order(n);
    }
    for (const auto& g : groups) {
      if (id == "prop3.1") {
        if (n >= 2) out.push_back(near_tight_verdict(g));
      } else if (id == "prop3.2") {
        out.push_back(verify_pair_cover_threshold(g, options.verify));
      } else if (id == "thm1" || id == "thm6") {
        out.push_back(verify_subset_sum_bound(g, options.min_size, options.verify));
      } else if (id == "thm5") {
        if (n >= 3) out.push_back(critical_number(g, options.verify).verdict);
      }
    }
  }
  return out;
}

}  // namespace subsum
