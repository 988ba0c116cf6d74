#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace subsum::bits {

inline std::size_t words_for(std::uint64_t nbits) { return nbits == 0 ? 1 : (nbits + 63) / 64; }

// Mask of the valid bits in the last word of an nbits-long vector.
inline std::uint64_t tail_mask(std::uint64_t nbits) {
  const unsigned r = static_cast<unsigned>(nbits % 64);
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

// Word w of (v << s), treating v as one long little-endian bit string.
inline std::uint64_t shl_word(std::span<const std::uint64_t> v, std::size_t w, std::uint64_t s) {
  const std::size_t q = static_cast<std::size_t>(s / 64);
  const unsigned r = static_cast<unsigned>(s % 64);
  if (w < q) return 0;
  const std::size_t i = w - q;
  std::uint64_t out = v[i] << r;
  if (r != 0 && i > 0) out |= v[i - 1] >> (64 - r);
  return out;
}

// Word w of (v >> s).
inline std::uint64_t shr_word(std::span<const std::uint64_t> v, std::size_t w, std::uint64_t s) {
  const std::size_t q = static_cast<std::size_t>(s / 64);
  const unsigned r = static_cast<unsigned>(s % 64);
  const std::size_t i = w + q;
  if (i >= v.size()) return 0;
  std::uint64_t out = v[i] >> r;
  if (r != 0 && i + 1 < v.size()) out |= v[i + 1] << (64 - r);
  return out;
}

inline std::uint32_t popcount(std::span<const std::uint64_t> v) {
  std::uint32_t n = 0;
  for (const auto w : v) n += static_cast<std::uint32_t>(std::popcount(w));
  return n;
}

inline bool test(std::span<const std::uint64_t> v, std::uint32_t i) {
  return (v[i / 64] >> (i % 64)) & 1u;
}

inline void set(std::span<std::uint64_t> v, std::uint32_t i) { v[i / 64] |= std::uint64_t{1} << (i % 64); }

inline void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

template <class Fn>
void for_each_set(std::span<const std::uint64_t> v, Fn&& fn) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    std::uint64_t word = v[w];
    while (word != 0) {
      const int b = std::countr_zero(word);
      fn(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      word &= word - 1;
    }
  }
}

}  // namespace subsum::bits
