#pragma once

#include <bit>
#include <cstdint>
#include <span>

namespace srg12 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

namespace bits {

inline bool test(std::span<const Word> row, std::size_t i) noexcept {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> row, std::size_t i) noexcept {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void reset(std::span<Word> row, std::size_t i) noexcept {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t count(std::span<const Word> row) noexcept {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/// Clears every bit at index <= v.
inline void clear_through(std::span<Word> row, std::size_t v) noexcept {
  const std::size_t w = v / kWordBits;
  for (std::size_t i = 0; i < w && i < row.size(); ++i) row[i] = 0;
  if (w < row.size()) {
    const std::size_t b = v % kWordBits;
    row[w] &= (b == kWordBits - 1) ? Word{0} : (~Word{0} << (b + 1));
  }
}

template <class F>
inline void for_each(std::span<const Word> row, F&& f) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    Word w = row[i];
    while (w != 0) {
      const int b = std::countr_zero(w);
      f(static_cast<std::uint32_t>(i * kWordBits + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
}

}  // namespace bits
}  // namespace srg12
