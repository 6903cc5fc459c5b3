#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rainbow {

using ColorId = std::uint32_t;

/// Set of color ids with O(1) insert/contains and linear disjointness.
/// Capacities up to 64 use a single machine word; larger capacities fall
/// back to a word vector. Both representations behave identically.
class ColorSet {
 public:
  ColorSet() : ColorSet(64) {}

  explicit ColorSet(std::size_t capacity)
      : wide_(capacity > 64), count_(0), word_(0) {
    if (wide_) words_.assign((capacity + 63) / 64, 0);
  }

  std::size_t capacity() const { return wide_ ? words_.size() * 64 : 64; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  void insert(ColorId c) {
    std::uint64_t& w = word_for(c);
    const std::uint64_t bit = 1ULL << (c & 63);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }

  void erase(ColorId c) {
    std::uint64_t& w = word_for(c);
    const std::uint64_t bit = 1ULL << (c & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  bool contains(ColorId c) const {
    if (wide_) {
      const std::size_t idx = c >> 6;
      if (idx >= words_.size()) return false;
      return (words_[idx] >> (c & 63)) & 1;
    }
    if (c >= 64) return false;
    return (word_ >> c) & 1;
  }

  bool disjoint_with(const ColorSet& other) const {
    if (!wide_ && !other.wide_) return (word_ & other.word_) == 0;
    const std::size_t n = std::max(word_count(), other.word_count());
    for (std::size_t i = 0; i < n; ++i)
      if ((word_at(i) & other.word_at(i)) != 0) return false;
    return true;
  }

  std::vector<ColorId> to_vector() const {
    std::vector<ColorId> out;
    out.reserve(count_);
    const std::size_t n = word_count();
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t w = word_at(i);
      while (w) {
        const int b = std::countr_zero(w);
        out.push_back(static_cast<ColorId>(i * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  std::size_t word_count() const { return wide_ ? words_.size() : 1; }

  std::uint64_t word_at(std::size_t i) const {
    if (wide_) return i < words_.size() ? words_[i] : 0;
    return i == 0 ? word_ : 0;
  }

  std::uint64_t& word_for(ColorId c) {
    if (wide_) {
      const std::size_t idx = c >> 6;
      if (idx >= words_.size()) words_.resize(idx + 1, 0);
      return words_[idx];
    }
    if (c >= 64) {
      // grow into the wide representation
      words_.assign((c >> 6) + 1, 0);
      words_[0] = word_;
      wide_ = true;
      return words_[c >> 6];
    }
    return word_;
  }

  bool wide_;
  std::size_t count_;
  std::uint64_t word_;
  std::vector<std::uint64_t> words_;
};

}  // namespace rainbow
