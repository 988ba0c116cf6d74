#include "subsum/constructions.hpp"

#include <algorithm>

#include "subsum/errors.hpp"
#include "subsum/sumset.hpp"

namespace subsum {

namespace {

Claim equal_claim(std::string name, const Json& expected, const Json& observed) {
  return {std::move(name), expected, observed, expected == observed};
}

std::vector<std::uint32_t> uncovered(const AbelianGroup& g, const GroupSubset& a) {
  return pair_cover(g, a).complement().indices();
}

// Every expected element must appear among the observed ones.
Claim contains_claim(std::string name, const std::vector<std::uint32_t>& expected,
                     const std::vector<std::uint32_t>& observed) {
  const bool holds = std::includes(observed.begin(), observed.end(), expected.begin(), expected.end());
  return {std::move(name), expected, observed, holds};
}

Construction finish(Construction c) {
  std::string failed;
  for (const auto& claim : c.claims) {
    if (!claim.holds) failed += (failed.empty() ? "" : ", ") + claim.name;
  }
  if (!failed.empty()) {
    throw ClaimViolation(c.name + " on " + c.group.to_string() + ": claim(s) failed: " + failed);
  }
  return c;
}

}  // namespace

Construction tight_example(std::uint32_t k) {
  if (k < 3) throw PreconditionError("tight example needs k >= 3");
  const auto g = AbelianGroup::cyclic(3 * k);
  GroupSubset s(g);
  s.insert(1);
  for (std::uint32_t i = 1; i < k; ++i) s.insert(3 * i);

  Construction c{"tight", g, s, {{"k", k}}, {}};
  c.claims.push_back(equal_claim("size", k, s.size()));
  c.claims.push_back(equal_claim("generating", true, is_generating(g, s)));
  c.claims.push_back(equal_claim("zero_excluded", true, !s.contains(0u)));
  c.claims.push_back(equal_claim("subset_sum_count", 2 * k, sigma(g, s).size()));
  return finish(std::move(c));
}

Construction even_counterexample(std::uint32_t m) {
  if (m < 4 || m % 2 != 0) throw PreconditionError("even counterexample needs even m >= 4");
  const auto g = AbelianGroup::cyclic(m);
  GroupSubset a(g);
  for (std::uint32_t i = 1; i <= m / 2; ++i) a.insert(i);

  Construction c{"even-ce", g, a, {{"m", m}}, {}};
  c.claims.push_back(equal_claim("twice_size", m, 2 * a.size()));
  c.claims.push_back(equal_claim("zero_excluded", true, !a.contains(0u)));
  c.claims.push_back(contains_claim("uncovered", {0}, uncovered(g, a)));
  return finish(std::move(c));
}

Construction two_mod_four_counterexample(std::uint32_t m) {
  if (m % 4 != 2 || m < 6) throw PreconditionError("two-mod-four counterexample needs m = 2 mod 4 and m >= 6");
  const auto g = AbelianGroup::cyclic(m);
  GroupSubset a(g);
  for (std::uint32_t i = 1; i <= (m - 2) / 4; ++i) a.insert(i);
  for (std::uint32_t i = m / 2; i <= (3 * m - 2) / 4; ++i) a.insert(i);

  Construction c{"mod4-ce", g, a, {{"m", m}}, {}};
  c.claims.push_back(equal_claim("twice_size", m, 2 * a.size()));
  c.claims.push_back(equal_claim("zero_excluded", true, !a.contains(0u)));
  c.claims.push_back(contains_claim("uncovered", {0, m / 2 - 1}, uncovered(g, a)));
  return finish(std::move(c));
}

Construction near_tight_construction(const AbelianGroup& group) {
  if (group.order() < 2) throw PreconditionError("near-tight construction needs |G| >= 2");
  const auto g2 = torsion_two(group);
  GroupSubset a(group);
  for (std::uint32_t x = 1; x < group.order(); ++x) {
    const auto nx = group.neg_index(x);
    if (nx == x || x < nx) a.insert(x);
  }

  Construction c{"near-tight", group, a, {{"torsion_two_size", g2.size()}}, {}};
  c.claims.push_back(equal_claim("twice_size", group.order() + g2.size() - 2, 2 * a.size()));
  c.claims.push_back(equal_claim("zero_excluded", true, !a.contains(0u)));
  const auto missing = uncovered(group, a);
  c.claims.push_back({"pair_cover_incomplete", true, missing, !missing.empty()});
  return finish(std::move(c));
}

Json to_json(const Construction& c) {
  Json claims = Json::array();
  for (const auto& claim : c.claims) {
    claims.push_back(
        {{"name", claim.name}, {"expected", claim.expected}, {"observed", claim.observed}, {"holds", claim.holds}});
  }
  Json j = Json::object();
  j["construction"] = c.name;
  j["group"] = c.group.to_string();
  j["params"] = c.params;
  j["subset"] = c.subset.indices();
  j["claims"] = claims;
  j["status"] = "verified";
  j["toolchain_version"] = toolchain_version();
  return j;
}

}  // namespace subsum
