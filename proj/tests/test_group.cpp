#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracle.hpp"
#include "subsum/errors.hpp"
#include "subsum/group.hpp"
#include "subsum/subset.hpp"

using namespace subsum;

namespace {

std::vector<std::uint32_t> factors_of(const AbelianGroup& g) {
  return {g.invariant_factors().begin(), g.invariant_factors().end()};
}

std::vector<AbelianGroup> all_groups_up_to(std::uint32_t n) {
  std::vector<AbelianGroup> out;
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (auto& g : enumerate_groups_of_order(k)) out.push_back(g);
  }
  return out;
}

// Number of partitions of e.
std::uint64_t partition_count(unsigned e) {
  std::vector<std::uint64_t> p(e + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= e; ++part) {
    for (unsigned n = part; n <= e; ++n) p[n] += p[n - part];
  }
  return p[e];
}

}  // namespace

TEST(ParseGroupSpec, SingleCyclicFactor) { EXPECT_EQ(factors_of(parse_group_spec("Z9")), (std::vector<std::uint32_t>{9})); }

TEST(ParseGroupSpec, ExponentExpands) {
  EXPECT_EQ(factors_of(parse_group_spec("Z2^3")), (std::vector<std::uint32_t>{2, 2, 2}));
}

TEST(ParseGroupSpec, CoprimeFactorsCollapse) {
  const auto g = parse_group_spec("Z2xZ3");
  EXPECT_EQ(factors_of(g), (std::vector<std::uint32_t>{6}));
  EXPECT_TRUE(g.is_cyclic());
}

TEST(ParseGroupSpec, TwoByFour) { EXPECT_EQ(factors_of(parse_group_spec("Z2xZ4")), (std::vector<std::uint32_t>{2, 4})); }

TEST(ParseGroupSpec, RegroupsPrimePowers) {
  EXPECT_EQ(factors_of(parse_group_spec("Z4 x Z6")), (std::vector<std::uint32_t>{2, 12}));
  EXPECT_EQ(factors_of(parse_group_spec("Z6xZ10xZ15")), (std::vector<std::uint32_t>{30, 30}));
  EXPECT_EQ(factors_of(parse_group_spec("Z4xZ2")), (std::vector<std::uint32_t>{2, 4}));
  EXPECT_EQ(parse_group_spec("Z3xZ2"), parse_group_spec("Z6"));
}

TEST(ParseGroupSpec, RejectsMalformed) {
  for (const char* bad : {"", "Z", "Z0", "Z1", "Z2x", "xZ2", "Y4", "Z2^0", "Z2^", "Z-3", "Z2*Z3", "Z2xxZ3", "Z2^3^2"}) {
    EXPECT_THROW(parse_group_spec(bad), SpecError) << bad;
  }
}

TEST(ParseGroupSpec, RejectsOversizedOrder) {
  EXPECT_THROW(parse_group_spec("Z2^21"), SpecError);
  EXPECT_NO_THROW(parse_group_spec("Z2^20"));
  EXPECT_THROW(parse_group_spec("Z99999999999999999999"), SpecError);
  EXPECT_THROW(parse_group_spec("Z64", GroupOptions{.max_order = 32}), SpecError);
}

TEST(ParseGroupSpec, CanonicalRenderingRoundTrips) {
  for (const auto& g : all_groups_up_to(64)) {
    if (g.order() == 1) {
      EXPECT_EQ(g.to_string(), "Z1");
      continue;
    }
    EXPECT_EQ(parse_group_spec(g.to_string()), g) << g.to_string();
  }
}

TEST(AbelianGroup, RejectsBrokenChain) {
  EXPECT_THROW(AbelianGroup({4, 2}), PreconditionError);
  EXPECT_THROW(AbelianGroup({2, 3}), PreconditionError);
  EXPECT_THROW(AbelianGroup({1, 4}), PreconditionError);
}

TEST(AbelianGroup, IndexTupleBijection) {
  const AbelianGroup g({2, 6, 12});
  std::vector<bool> seen(g.order(), false);
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    const auto t = g.to_tuple(g.element(i));
    EXPECT_EQ(g.from_tuple(t).index, i);
    // first coordinate varies fastest
    EXPECT_EQ(t[0], i % 2);
    seen[i] = true;
  }
  EXPECT_EQ(std::count(seen.begin(), seen.end(), true), 144);
}

TEST(Arithmetic, CyclicAddition) {
  const auto g = parse_group_spec("Z9");
  EXPECT_EQ(g.add(g.element(4), g.element(7)).index, 2u);
}

TEST(Arithmetic, InverseLaw) {
  for (const auto& g : all_groups_up_to(40)) {
    for (std::uint32_t i = 0; i < g.order(); ++i) {
      const auto x = g.element(i);
      EXPECT_EQ(g.add(x, g.neg(x)), g.zero());
    }
  }
}

TEST(Arithmetic, ComponentwiseSum) {
  const auto g = parse_group_spec("Z2xZ4");
  const std::vector<std::uint32_t> a{1, 3}, b{1, 2};
  EXPECT_EQ(g.to_tuple(g.add(g.from_tuple(a), g.from_tuple(b))), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Arithmetic, MatchesTupleOracle) {
  for (const auto& g : all_groups_up_to(36)) {
    const oracle::TupleGroup og{factors_of(g)};
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.neg_index(x), og.neg(x));
      for (std::uint32_t y = 0; y < g.order(); ++y) ASSERT_EQ(g.add_index(x, y), og.add(x, y));
    }
  }
}

TEST(Arithmetic, ForeignElementRejected) {
  const auto z6 = parse_group_spec("Z6");
  const auto z2z2 = parse_group_spec("Z2^2");
  EXPECT_THROW(z6.add(z6.element(1), z2z2.element(1)), ForeignElementError);
  EXPECT_THROW(z6.neg(z2z2.element(1)), ForeignElementError);
  EXPECT_THROW(z6.element(6), PreconditionError);
  // Structurally equal groups share elements.
  EXPECT_NO_THROW(z6.add(z6.element(1), AbelianGroup::cyclic(6).element(5)));
}

TEST(Translate, MatchesPointwiseShift) {
  std::mt19937_64 rng(7);
  std::vector<AbelianGroup> groups = all_groups_up_to(48);
  for (const char* spec : {"Z130", "Z2xZ66", "Z4xZ36", "Z3xZ3xZ27", "Z2x Z2 x Z2 x Z40", "Z1000"}) {
    groups.push_back(parse_group_spec(spec));
  }
  // Same groups with masks rebuilt on every call.
  for (const char* spec : {"Z2xZ66", "Z4xZ36", "Z2xZ2xZ6"}) {
    groups.push_back(parse_group_spec(spec, GroupOptions{.mask_cache_words = 0}));
  }
  for (const auto& g : groups) {
    const oracle::TupleGroup og{factors_of(g)};
    for (int trial = 0; trial < 6; ++trial) {
      GroupSubset s(g);
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (rng() % 3 == 0) s.insert(x);
      }
      for (std::uint32_t by = 0; by < g.order(); by += 1 + static_cast<std::uint32_t>(rng() % 3)) {
        GroupSubset expected(g);
        for (auto x : s.indices()) expected.insert(og.add(x, by));
        std::vector<std::uint64_t> out(g.words());
        g.translate(s.words(), by, out);
        ASSERT_EQ(GroupSubset::from_words(g, out), expected) << g.to_string() << " by " << by;
      }
    }
  }
}

TEST(TorsionTwo, Examples) {
  const auto z9 = parse_group_spec("Z9");
  EXPECT_EQ(torsion_two(z9).indices(), (std::vector<std::uint32_t>{0}));
  const auto z6 = parse_group_spec("Z6");
  EXPECT_EQ(torsion_two(z6).indices(), (std::vector<std::uint32_t>{0, 3}));
  const auto z2z4 = parse_group_spec("Z2xZ4");
  const auto t = torsion_two(z2z4);
  EXPECT_EQ(t.size(), 4u);
  for (auto tuple : {std::vector<std::uint32_t>{0, 0}, {1, 0}, {0, 2}, {1, 2}}) EXPECT_TRUE(t.contains(z2z4.from_tuple(tuple)));
}

TEST(TorsionTwo, SizeIsTwoToTheEvenFactors) {
  for (const auto& g : all_groups_up_to(64)) {
    std::uint32_t even = 0;
    for (auto d : g.invariant_factors()) even += d % 2 == 0;
    EXPECT_EQ(torsion_two(g).size(), 1u << even) << g.to_string();
  }
}

TEST(TorsionTwo, IsSubgroup) {
  for (const auto& g : all_groups_up_to(64)) {
    const auto t = torsion_two(g);
    for (auto x : t.indices()) {
      EXPECT_TRUE(t.contains(g.neg_index(x)));
      for (auto y : t.indices()) ASSERT_TRUE(t.contains(g.add_index(x, y)));
    }
  }
}

TEST(TorsionTwo, OrderPlusTorsionIsEven) {
  for (const auto& g : all_groups_up_to(64)) EXPECT_EQ((g.order() + torsion_two(g).size()) % 2, 0u) << g.to_string();
}

TEST(CountHalvings, Examples) {
  const auto z9 = parse_group_spec("Z9");
  EXPECT_EQ(count_halvings(z9, z9.element(5)), 1u);
  const auto z6 = parse_group_spec("Z6");
  EXPECT_EQ(count_halvings(z6, z6.element(1)), 0u);
  EXPECT_EQ(count_halvings(z6, z6.element(2)), 2u);
}

TEST(CountHalvings, EmptyOrTorsionSized) {
  for (const auto& g : all_groups_up_to(64)) {
    const auto t = torsion_two(g).size();
    std::uint64_t total = 0;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      const auto n = count_halvings(g, g.element(x));
      ASSERT_TRUE(n == 0 || n == t) << g.to_string() << " g=" << x << " n=" << n;
      total += n;
    }
    EXPECT_EQ(total, g.order()) << g.to_string();
  }
}

TEST(SubgroupGenerated, Examples) {
  const auto z9 = parse_group_spec("Z9");
  const std::vector<std::uint32_t> s{3, 6};
  const auto h = subgroup_generated(z9, GroupSubset::from_indices(z9, s));
  EXPECT_EQ(h.indices(), (std::vector<std::uint32_t>{0, 3, 6}));
  EXPECT_FALSE(is_generating(z9, GroupSubset::from_indices(z9, s)));

  for (std::uint32_t m = 2; m <= 30; ++m) {
    const auto g = AbelianGroup::cyclic(m);
    const std::vector<std::uint32_t> one{1};
    EXPECT_TRUE(is_generating(g, GroupSubset::from_indices(g, one)));
  }
  const auto z2z4 = parse_group_spec("Z2xZ4");
  EXPECT_EQ(subgroup_generated(z2z4, GroupSubset(z2z4)).indices(), (std::vector<std::uint32_t>{0}));
  EXPECT_FALSE(is_generating(z2z4, GroupSubset(z2z4)));
  EXPECT_TRUE(is_generating(AbelianGroup::cyclic(1), GroupSubset(AbelianGroup::cyclic(1))));
}

TEST(SubgroupGenerated, MatchesClosureOracle) {
  std::mt19937_64 rng(11);
  for (const auto& g : all_groups_up_to(32)) {
    const oracle::TupleGroup og{factors_of(g)};
    for (int trial = 0; trial < 8; ++trial) {
      GroupSubset s(g);
      const auto picks = rng() % 3;
      for (std::uint64_t i = 0; i < picks; ++i) s.insert(static_cast<std::uint32_t>(rng() % g.order()));
      std::set<std::uint32_t> closure{0};
      for (auto x : s.indices()) closure.insert(x);
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto x : std::vector(closure.begin(), closure.end())) {
          for (auto y : std::vector(closure.begin(), closure.end())) grew |= closure.insert(og.add(x, y)).second;
        }
      }
      EXPECT_EQ(subgroup_generated(g, s).indices(), std::vector<std::uint32_t>(closure.begin(), closure.end()));
    }
  }
}

TEST(EnumerateGroups, Examples) {
  auto specs = [](std::uint64_t n) {
    std::vector<std::string> out;
    for (const auto& g : enumerate_groups_of_order(n)) out.push_back(g.to_string());
    return out;
  };
  EXPECT_EQ(specs(8), (std::vector<std::string>{"Z8", "Z2xZ4", "Z2xZ2xZ2"}));
  EXPECT_EQ(specs(6), (std::vector<std::string>{"Z6"}));
  EXPECT_EQ(specs(12), (std::vector<std::string>{"Z12", "Z2xZ6"}));
  EXPECT_EQ(specs(1), (std::vector<std::string>{"Z1"}));
  EXPECT_THROW(enumerate_groups_of_order(0), PreconditionError);
}

TEST(EnumerateGroups, CountIsProductOfPartitionNumbers) {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    std::uint64_t expected = 1;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p <= rest; ++p) {
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      expected *= partition_count(e);
    }
    const auto groups = enumerate_groups_of_order(n);
    EXPECT_EQ(groups.size(), expected) << n;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      EXPECT_EQ(groups[i].order(), n);
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(groups[i] == groups[j]);
    }
  }
}
