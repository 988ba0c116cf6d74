#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "subsum/group.hpp"

namespace subsum {

/// A subset of a group, stored as a bit-vector of length |G| keyed by element
/// index. The cardinality is cached and kept in sync on every mutation.
class GroupSubset {
 public:
  explicit GroupSubset(const AbelianGroup& group);

  static GroupSubset from_indices(const AbelianGroup& group,
                                  std::span<const std::uint32_t> indices);
  static GroupSubset from_words(const AbelianGroup& group,
                                std::vector<std::uint64_t> words);
  static GroupSubset full(const AbelianGroup& group);
  static GroupSubset singleton(const AbelianGroup& group, GroupElement x);

  bool contains(std::uint32_t index) const;
  bool contains(GroupElement x) const;
  void insert(std::uint32_t index);
  void insert(GroupElement x);
  void erase(std::uint32_t index);

  std::uint32_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  std::uint32_t universe() const noexcept { return universe_; }
  std::uint64_t group_key() const noexcept { return key_; }
  std::span<const std::uint64_t> words() const noexcept { return bits_; }

  // Sorted ascending.
  std::vector<std::uint32_t> indices() const;

  bool is_subset_of(const GroupSubset& other) const;
  bool is_full() const noexcept { return count_ == universe_; }
  GroupSubset complement() const;

  GroupSubset& operator|=(const GroupSubset& other);
  GroupSubset& operator&=(const GroupSubset& other);
  friend GroupSubset operator|(GroupSubset a, const GroupSubset& b) { return a |= b; }
  friend GroupSubset operator&(GroupSubset a, const GroupSubset& b) { return a &= b; }
  friend bool operator==(const GroupSubset& a, const GroupSubset& b) noexcept;

 private:
  GroupSubset(std::uint32_t universe, std::uint64_t key, std::vector<std::uint64_t> bits);
  void recount() noexcept;
  void require_same_group(const GroupSubset& other) const;
  void require_index(std::uint32_t index) const;

  std::vector<std::uint64_t> bits_;
  std::uint32_t universe_ = 0;
  std::uint64_t key_ = 0;
  std::uint32_t count_ = 0;
};

void require_subset_of_group(const AbelianGroup& group, const GroupSubset& subset);

// {x : 2x = 0}; always a subgroup of size 2^(number of even invariant factors).
GroupSubset torsion_two(const AbelianGroup& group);

// |{x : 2x = g}|; either 0 or |torsion_two(G)|.
std::uint32_t count_halvings(const AbelianGroup& group, GroupElement g);

/// Closure of S u (-S) u {0} under addition.
GroupSubset subgroup_generated(const AbelianGroup& group, const GroupSubset& s);
bool is_generating(const AbelianGroup& group, const GroupSubset& s);

/// {-x : x in A}.
GroupSubset negated(const AbelianGroup& group, const GroupSubset& a);

}  // namespace subsum
