#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace kmin {

// Fixed-width set of box indices; index < kMaxBoxes.
class BoxSet {
 public:
  static constexpr int kWords = 4;
  static constexpr int kMaxBoxes = 64 * kWords;

  constexpr BoxSet() = default;

  static BoxSet single(int i) {
    BoxSet s;
    s.set(i);
    return s;
  }

  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool empty() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }
  bool any() const { return !empty(); }
  bool intersects(const BoxSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool subset_of(const BoxSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  // Smallest index >= from, or -1.
  int next(int from) const {
    if (from >= kMaxBoxes) return -1;
    int k = from >> 6;
    std::uint64_t x = w_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (x) return (k << 6) + std::countr_zero(x);
      if (++k == kWords) return -1;
      x = w_[k];
    }
  }
  int first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < kWords; ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        int b = std::countr_zero(x);
        f((k << 6) + b);
        x &= x - 1;
      }
    }
  }

  BoxSet& operator|=(const BoxSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  BoxSet& operator&=(const BoxSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  BoxSet& operator-=(const BoxSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend BoxSet operator|(BoxSet a, const BoxSet& b) { return a |= b; }
  friend BoxSet operator&(BoxSet a, const BoxSet& b) { return a &= b; }
  friend BoxSet operator-(BoxSet a, const BoxSet& b) { return a -= b; }

  friend bool operator==(const BoxSet&, const BoxSet&) = default;
  friend auto operator<=>(const BoxSet&, const BoxSet&) = default;

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : w_) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
    return h;
  }

  const std::array<std::uint64_t, kWords>& words() const { return w_; }

 private:
  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace kmin

template <>
struct std::hash<kmin::BoxSet> {
  std::size_t operator()(const kmin::BoxSet& s) const { return s.hash(); }
};
