#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace translat {

inline uint64_t fnv1a64(const void* data, size_t len,
                        uint64_t h = 0xcbf29ce484222325ull) {
  auto p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Set of integers in [0, size), packed into 64-bit words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool operator==(const Bitset&) const = default;

  template <class F>
  void for_each(F f) const {
    for (size_t w = 0; w < words_.size(); ++w)
      for (uint64_t bits = words_[w]; bits; bits &= bits - 1)
        f(int(w * 64 + std::countr_zero(bits)));
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  // Orders sets by their ascending member lists; the set owning the
  // smallest differing member sorts first.
  bool members_less(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) return words_[i] & (diff & -diff);
    }
    return false;
  }

  uint64_t hash() const {
    return fnv1a64(words_.data(), words_.size() * sizeof(uint64_t));
  }

  std::span<const uint64_t> words() const { return words_; }

 private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

/// Square boolean matrix over [0, dim) x [0, dim), one bit row segment
/// per row. Unused tail bits stay zero so hashing and comparison can
/// work on raw words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), w_((n + 63) / 64), words_(size_t(n) * w_, 0) {}

  int dim() const { return n_; }
  int row_words() const { return w_; }

  bool test(int i, int j) const {
    return (words_[size_t(i) * w_ + (j >> 6)] >> (j & 63)) & 1;
  }
  void set(int i, int j) {
    words_[size_t(i) * w_ + (j >> 6)] |= uint64_t{1} << (j & 63);
  }
  void reset(int i, int j) {
    words_[size_t(i) * w_ + (j >> 6)] &= ~(uint64_t{1} << (j & 63));
  }
  // Sets (i, j); true when the bit was not set before.
  bool test_set(int i, int j) {
    uint64_t& w = words_[size_t(i) * w_ + (j >> 6)];
    uint64_t m = uint64_t{1} << (j & 63);
    if (w & m) return false;
    w |= m;
    return true;
  }

  std::span<uint64_t> row(int i) { return {words_.data() + size_t(i) * w_, size_t(w_)}; }
  std::span<const uint64_t> row(int i) const {
    return {words_.data() + size_t(i) * w_, size_t(w_)};
  }

  // row[dst] |= row[src]; true when row[dst] changed.
  bool row_or(int dst, int src) {
    uint64_t* d = words_.data() + size_t(dst) * w_;
    const uint64_t* s = words_.data() + size_t(src) * w_;
    uint64_t changed = 0;
    for (int i = 0; i < w_; ++i) {
      uint64_t nw = d[i] | s[i];
      changed |= nw ^ d[i];
      d[i] = nw;
    }
    return changed != 0;
  }

  bool subset_of(const BitMatrix& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  template <class F>
  void for_each_in_row(int i, F f) const {
    const uint64_t* r = words_.data() + size_t(i) * w_;
    for (int w = 0; w < w_; ++w)
      for (uint64_t bits = r[w]; bits; bits &= bits - 1)
        f(int(w * 64 + std::countr_zero(bits)));
  }

  bool operator==(const BitMatrix&) const = default;

  bool lex_less(const BitMatrix& o) const { return words_ < o.words_; }

  uint64_t hash() const {
    return fnv1a64(words_.data(), words_.size() * sizeof(uint64_t));
  }

 private:
  int n_ = 0;
  int w_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace translat
