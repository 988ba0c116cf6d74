#include "subsum/subset.hpp"

#include <algorithm>

#include "bits.hpp"
#include "subsum/errors.hpp"

namespace subsum {

GroupSubset::GroupSubset(const AbelianGroup& group)
    : bits_(group.words(), 0), universe_(group.order()), key_(group.key()) {}

GroupSubset::GroupSubset(std::uint32_t universe, std::uint64_t key, std::vector<std::uint64_t> bits)
    : bits_(std::move(bits)), universe_(universe), key_(key) {
  recount();
}

GroupSubset GroupSubset::from_indices(const AbelianGroup& group, std::span<const std::uint32_t> indices) {
  GroupSubset out(group);
  for (auto i : indices) out.insert(i);
  return out;
}

GroupSubset GroupSubset::from_words(const AbelianGroup& group, std::vector<std::uint64_t> words) {
  if (words.size() != group.words()) throw PreconditionError("bit-vector length does not match the group");
  if (!words.empty() && (words.back() & ~bits::tail_mask(group.order())) != 0) {
    throw PreconditionError("bit-vector has bits beyond the group order");
  }
  return GroupSubset(group.order(), group.key(), std::move(words));
}

GroupSubset GroupSubset::full(const AbelianGroup& group) {
  std::vector<std::uint64_t> words(group.words(), ~std::uint64_t{0});
  words.back() &= bits::tail_mask(group.order());
  return GroupSubset(group.order(), group.key(), std::move(words));
}

GroupSubset GroupSubset::singleton(const AbelianGroup& group, GroupElement x) {
  group.require_member(x);
  GroupSubset out(group);
  out.insert(x.index);
  return out;
}

void GroupSubset::require_index(std::uint32_t index) const {
  if (index >= universe_) {
    throw PreconditionError("element index " + std::to_string(index) + " out of range for a group of order " +
                            std::to_string(universe_));
  }
}

void GroupSubset::require_same_group(const GroupSubset& other) const {
  if (other.key_ != key_ || other.universe_ != universe_) {
    throw ForeignElementError("subsets belong to different groups");
  }
}

bool GroupSubset::contains(std::uint32_t index) const {
  require_index(index);
  return bits::test(bits_, index);
}

bool GroupSubset::contains(GroupElement x) const {
  if (x.group_key != key_) throw ForeignElementError("element belongs to a different group");
  return contains(x.index);
}

void GroupSubset::insert(std::uint32_t index) {
  require_index(index);
  if (!bits::test(bits_, index)) {
    bits::set(bits_, index);
    ++count_;
  }
}

void GroupSubset::insert(GroupElement x) {
  if (x.group_key != key_) throw ForeignElementError("element belongs to a different group");
  insert(x.index);
}

void GroupSubset::erase(std::uint32_t index) {
  require_index(index);
  if (bits::test(bits_, index)) {
    bits_[index / 64] &= ~(std::uint64_t{1} << (index % 64));
    --count_;
  }
}

std::vector<std::uint32_t> GroupSubset::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(count_);
  bits::for_each_set(bits_, [&](std::uint32_t i) { out.push_back(i); });
  return out;
}

bool GroupSubset::is_subset_of(const GroupSubset& other) const {
  require_same_group(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  }
  return true;
}

GroupSubset GroupSubset::complement() const {
  auto words = bits_;
  for (auto& w : words) w = ~w;
  words.back() &= bits::tail_mask(universe_);
  return GroupSubset(universe_, key_, std::move(words));
}

GroupSubset& GroupSubset::operator|=(const GroupSubset& other) {
  require_same_group(other);
  bits::or_into(bits_, other.bits_);
  recount();
  return *this;
}

GroupSubset& GroupSubset::operator&=(const GroupSubset& other) {
  require_same_group(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
  recount();
  return *this;
}

bool operator==(const GroupSubset& a, const GroupSubset& b) noexcept {
  return a.key_ == b.key_ && a.universe_ == b.universe_ && a.bits_ == b.bits_;
}

void GroupSubset::recount() noexcept { count_ = bits::popcount(bits_); }

void require_subset_of_group(const AbelianGroup& group, const GroupSubset& subset) {
  if (subset.group_key() != group.key() || subset.universe() != group.order()) {
    throw ForeignElementError("subset does not belong to " + group.to_string());
  }
}

GroupSubset torsion_two(const AbelianGroup& group) {
  GroupSubset out(group);
  for (std::uint32_t x = 0; x < group.order(); ++x) {
    if (group.double_index(x) == 0) out.insert(x);
  }
  return out;
}

std::uint32_t count_halvings(const AbelianGroup& group, GroupElement g) {
  group.require_member(g);
  std::uint32_t n = 0;
  for (std::uint32_t x = 0; x < group.order(); ++x) {
    if (group.double_index(x) == g.index) ++n;
  }
  return n;
}

GroupSubset subgroup_generated(const AbelianGroup& group, const GroupSubset& s) {
  require_subset_of_group(group, s);
  const std::size_t nw = group.words();
  std::vector<std::uint64_t> h(nw, 0), coset(nw), next(nw);
  h[0] = 1;
  // H <- H + <a>: walk the cosets H, H+a, H+2a, ... until one repeats.
  bits::for_each_set(s.words(), [&](std::uint32_t a) {
    if (bits::test(h, a)) return;
    coset = h;
    std::vector<std::uint64_t> acc = h;
    while (true) {
      group.translate(coset, a, next);
      if (next == h) break;
      bits::or_into(acc, next);
      std::swap(coset, next);
    }
    h = std::move(acc);
  });
  return GroupSubset::from_words(group, std::move(h));
}

bool is_generating(const AbelianGroup& group, const GroupSubset& s) {
  return subgroup_generated(group, s).is_full();
}

GroupSubset negated(const AbelianGroup& group, const GroupSubset& a) {
  require_subset_of_group(group, a);
  GroupSubset out(group);
  bits::for_each_set(a.words(), [&](std::uint32_t x) { out.insert(group.neg_index(x)); });
  return out;
}

}  // namespace subsum
