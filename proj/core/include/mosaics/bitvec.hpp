#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mosaics/errors.hpp"

namespace mosaics {

// Fixed-width bit vector over points 0..size-1.  Used for design blocks and
// for column masks during search.  Comparison is lexicographic on the packed
// words (low words first), which gives a deterministic total order.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static BitVec from_points(int nbits, std::span<const int> points) {
    BitVec bv(nbits);
    for (int p : points) bv.set(p);
    return bv;
  }

  int size() const { return nbits_; }

  bool test(int i) const {
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    if (i < 0 || i >= nbits_)
      throw Error("bit index " + std::to_string(i) + " out of range [0," +
                  std::to_string(nbits_) + ")");
    words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    if (i < 0 || i >= nbits_)
      throw Error("bit index " + std::to_string(i) + " out of range [0," +
                  std::to_string(nbits_) + ")");
    words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool all() const { return count() == nbits_; }

  bool disjoint(const BitVec& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return false;
    return true;
  }

  // True when every bit of o is also set in *this.
  bool contains(const BitVec& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (o.words_[i] & ~words_[i]) return false;
    return true;
  }

  BitVec& operator|=(const BitVec& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVec& operator^=(const BitVec& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  // Flip every bit inside [0, size).
  BitVec complement() const {
    BitVec r(nbits_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    int tail = nbits_ & 63;
    if (tail != 0) r.words_.back() &= (uint64_t{1} << tail) - 1;
    return r;
  }

  std::vector<int> points() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<int>(wi * 64) + b);
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const BitVec&) const = default;
  auto operator<=>(const BitVec& o) const {
    if (auto c = nbits_ <=> o.nbits_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        words_.begin(), words_.end(), o.words_.begin(), o.words_.end());
  }

  size_t hash() const {
    size_t h = static_cast<size_t>(nbits_) * 0x9e3779b97f4a7c15ull;
    for (uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

struct BitVecHash {
  size_t operator()(const BitVec& b) const { return b.hash(); }
};

}  // namespace mosaics
