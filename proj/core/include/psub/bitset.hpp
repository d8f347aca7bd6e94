#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace psub {

// Runtime-sized bitset used for subgroup membership masks over a group's
// element table. Layout is position = element index, so two masks over the
// same table compare and combine meaningfully.
class dense_bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  dense_bitset() = default;
  explicit dense_bitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  dense_bitset& operator|=(const dense_bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  dense_bitset& operator&=(const dense_bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend dense_bitset operator|(dense_bitset a, const dense_bitset& b) {
    a |= b;
    return a;
  }

  friend dense_bitset operator&(dense_bitset a, const dense_bitset& b) {
    a &= b;
    return a;
  }

  bool is_subset_of(const dense_bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const dense_bitset& o) const = default;

  // Containment-compatible linear order: at the first differing element
  // index, the set missing that element comes first. H subset of K implies
  // H < K, so sorting by this puts every subgroup before its overgroups.
  bool lex_less(const dense_bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t d = words_[i] ^ o.words_[i];
      if (d) {
        const std::uint64_t low = d & (~d + 1);
        return (words_[i] & low) == 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ nbits_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  std::size_t find_first() const { return find_next_from(0); }

  // First set position >= i + 1, or npos.
  std::size_t find_next(std::size_t i) const { return find_next_from(i + 1); }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f((wi << 6) + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t find_next_from(std::size_t i) const {
    if (i >= nbits_) return npos;
    std::size_t wi = i >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct dense_bitset_hash {
  std::size_t operator()(const dense_bitset& b) const { return b.hash(); }
};

}  // namespace psub
