#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace subshift {

// Fixed-size dynamic bitset with value semantics, hashing and ordering.
// Used for state subsets, symbol domains and boolean matrix rows.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static Bitset full(std::size_t n) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i);
    return b;
  }

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  // Index of the lowest set bit, or size() if none.
  std::size_t first() const { return next(0); }
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return size_;
      w = words_[wi];
    }
  }
  bool single() const { return count() == 1; }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull ^ size_;
    for (auto w : words_) h = (h ^ w) * 1099511628211ull + (h >> 29);
    return h;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset& a, const Bitset& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

inline Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
inline Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

}  // namespace subshift
