#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wilf {

/// Fixed-length bit table over [0, size). Word layout is exposed because the
/// gap sieves combine shifted copies word by word.
class BitTable {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitTable() = default;
  explicit BitTable(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }

  /// Number of set bits in [0, end).
  std::size_t count_below(std::size_t end) const noexcept {
    std::size_t full = end / kWordBits;
    std::size_t total = 0;
    for (std::size_t w = 0; w < full; ++w) total += static_cast<std::size_t>(std::popcount(words_[w]));
    if (std::size_t rem = end % kWordBits; rem != 0) {
      total += static_cast<std::size_t>(std::popcount(words_[full] & ((Word{1} << rem) - 1)));
    }
    return total;
  }

  /// Word `w` of this table shifted up by `shift` bits (bit i moves to i + shift).
  Word shifted_word(std::size_t w, std::size_t shift) const noexcept {
    std::size_t ws = shift / kWordBits;
    std::size_t bs = shift % kWordBits;
    if (w < ws) return 0;
    std::size_t src = w - ws;
    Word hi = src < words_.size() ? words_[src] : 0;
    if (bs == 0) return hi;
    Word lo = (src >= 1 && src - 1 < words_.size()) ? words_[src - 1] : 0;
    return (hi << bs) | (lo >> (kWordBits - bs));
  }

  friend bool operator==(const BitTable&, const BitTable&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace wilf
