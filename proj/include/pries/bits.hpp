#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace pries {

/// Fixed-width dynamic bitset over element indices [0, size).
///
/// Ordering (`operator<`) is lexicographic on the membership tuple
/// (b0, b1, ..., b_{n-1}) with absent < present, which is the canonical
/// presentation order for spectra.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  Bits(std::size_t n, std::initializer_list<std::size_t> members) : Bits(n) {
    for (auto i : members) set(i);
  }

  static Bits full(std::size_t n) {
    Bits b(n);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }
  bool all() const { return count() == n_; }

  bool is_subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bits& operator-=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  Bits operator~() const {
    Bits b = *this;
    for (auto& w : b.words_) w = ~w;
    b.trim();
    return b;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  friend bool operator==(const Bits& a, const Bits& b) = default;

  friend bool operator<(const Bits& a, const Bits& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      auto diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        auto low = static_cast<unsigned>(std::countr_zero(diff));
        return ((b.words_[k] >> low) & 1U) != 0;
      }
    }
    return false;
  }

  /// Smallest member >= from, or size() when there is none.
  std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t k = from >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return n_;
      w = words_[k];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t i = first(); i < n_; i = next(i + 1)) fn(i);
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace pries
