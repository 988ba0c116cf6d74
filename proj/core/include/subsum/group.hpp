#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subsum {

inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

struct GroupOptions {
  std::uint64_t max_order = kDefaultMaxOrder;
  // Translation masks for non-top components are cached up to this many
  // 64-bit words; larger groups rebuild them per call.
  std::size_t mask_cache_words = std::size_t{1} << 22;
};

// An element is its mixed-radix index plus the structural key of the group it
// was taken from. Groups with equal invariant factors share a key.
struct GroupElement {
  std::uint32_t index = 0;
  std::uint64_t group_key = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Finite abelian group Z_{d1} x ... x Z_{dk} in invariant-factor form.
///
/// Elements are encoded by the mixed-radix index x1 + d1*(x2 + d2*(...)),
/// with the first component varying fastest. The object is an immutable,
/// cheaply copyable handle; negation and doubling tables are built once at
/// construction and shared by all copies.
class AbelianGroup {
 public:
  /// Builds the group from an invariant-factor chain d1 | d2 | ... | dk with
  /// d1 >= 2. An empty chain is the trivial group.
  explicit AbelianGroup(std::vector<std::uint32_t> invariant_factors,
                        GroupOptions options = {});

  static AbelianGroup cyclic(std::uint32_t n, GroupOptions options = {});

  /// Direct product of cyclic groups of the given orders (each >= 1), brought
  /// to canonical invariant-factor form through its prime-power components.
  static AbelianGroup product_of_cyclic(std::span<const std::uint64_t> orders,
                                        GroupOptions options = {});

  std::span<const std::uint32_t> invariant_factors() const noexcept;
  std::uint32_t order() const noexcept;
  std::size_t rank() const noexcept;
  bool is_cyclic() const noexcept { return rank() <= 1; }
  std::uint64_t key() const noexcept;
  // Number of 64-bit words in a subset bit-vector of this group.
  std::size_t words() const noexcept;
  const GroupOptions& options() const noexcept;

  /// Canonical rendering, e.g. "Z2xZ4"; the trivial group renders as "Z1".
  std::string to_string() const;

  GroupElement element(std::uint32_t index) const;
  GroupElement from_tuple(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> to_tuple(GroupElement x) const;
  GroupElement zero() const noexcept { return {0, key()}; }

  GroupElement add(GroupElement x, GroupElement y) const;
  GroupElement neg(GroupElement x) const;

  // Unchecked index arithmetic for inner loops.
  std::uint32_t add_index(std::uint32_t x, std::uint32_t y) const noexcept;
  std::uint32_t neg_index(std::uint32_t x) const noexcept;
  std::uint32_t double_index(std::uint32_t x) const noexcept;

  /// dst = src + by, both bit-vectors of words() words. dst must not alias src.
  void translate(std::span<const std::uint64_t> src, std::uint32_t by,
                 std::span<std::uint64_t> dst) const;
  /// dst |= src + by. Aliasing is allowed.
  void translate_or(std::span<const std::uint64_t> src, std::uint32_t by,
                    std::span<std::uint64_t> dst) const;

  void require_member(GroupElement x) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) noexcept;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Parses `Z<n>` atoms with optional `^e`, joined by `x`, e.g. "Z2^3",
/// "Z2xZ4", "Z4 x Z6". Whitespace around atoms is ignored.
AbelianGroup parse_group_spec(std::string_view spec, GroupOptions options = {});

/// One group per isomorphism class of order n, built from partitions of the
/// prime exponents of n. Order: primes ascending, the first prime's
/// partitions outermost, each prime's partitions from the cyclic one down.
std::vector<AbelianGroup> enumerate_groups_of_order(std::uint64_t n,
                                                    GroupOptions options = {});

}  // namespace subsum
