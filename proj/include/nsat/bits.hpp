#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nsat {

// A subset of the ground set [n] = {1,...,n}: element i sits in bit i-1.
using SubsetMask = std::uint64_t;

inline int popcount(SubsetMask m) { return std::popcount(m); }

inline SubsetMask full_mask(int n) {
  return n >= 64 ? ~SubsetMask{0} : (SubsetMask{1} << n) - 1;
}

inline bool has_element(SubsetMask m, int i) { return m >> (i - 1) & 1; }
inline SubsetMask element_bit(int i) { return SubsetMask{1} << (i - 1); }

// a subseteq b
inline bool subset_leq(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

inline bool comparable(SubsetMask a, SubsetMask b) {
  return subset_leq(a, b) || subset_leq(b, a);
}

// Canonical order on masks: by cardinality, then numeric value.
inline bool mask_less(SubsetMask a, SubsetMask b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// Visits every subset of [n] in canonical order. Same-cardinality layers are
// walked with Gosper's hack.
template <class F>
void for_each_mask_canonical(int n, F&& fn) {
  const SubsetMask limit = SubsetMask{1} << n;
  fn(SubsetMask{0});
  for (int c = 1; c <= n; ++c) {
    SubsetMask v = (SubsetMask{1} << c) - 1;
    while (v < limit) {
      fn(v);
      SubsetMask t = v | (v - 1);
      if (t + 1 >= limit) break;
      v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
  }
}

// Small dynamic bitset over member indices of one family.
struct IndexBits {
  std::vector<std::uint64_t> w;

  IndexBits() = default;
  explicit IndexBits(int nbits, bool ones = false)
      : w((nbits + 63) / 64, ones ? ~std::uint64_t{0} : 0) {
    if (ones && nbits % 64) w.back() = (std::uint64_t{1} << (nbits % 64)) - 1;
  }

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return w[i >> 6] >> (i & 63) & 1; }

  IndexBits& operator&=(const IndexBits& o) {
    for (std::size_t b = 0; b < w.size(); ++b) w[b] &= o.w[b];
    return *this;
  }

  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }

  // Calls fn(i) for set bits in ascending order.
  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t b = 0; b < w.size(); ++b) {
      std::uint64_t x = w[b];
      while (x) {
        fn(int(b * 64) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

}  // namespace nsat
