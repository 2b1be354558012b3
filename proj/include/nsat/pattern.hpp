#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nsat {

inline constexpr int kMaxPatternSize = 8;

// A small poset on elements 0..k-1. below[i] bit j set means i < j strictly.
// A valid pattern's relation is irreflexive, antisymmetric and transitively
// closed; standard_pattern and parse_pattern only ever hand out valid ones.
struct PosetPattern {
  int k = 0;
  std::array<std::uint8_t, kMaxPatternSize> below{};

  bool less(int i, int j) const { return below[i] >> j & 1; }
  bool related(int i, int j) const { return less(i, j) || less(j, i); }
  int related_pairs() const;
  bool operator==(const PosetPattern& o) const = default;
};

bool validate_pattern(const PosetPattern& p);

// Names: N, butterfly, diamond, chevron, vee, antichain(k), chain(k) with
// 1 <= k <= 8. Throws std::invalid_argument for anything else.
//
// N is the four-element poset with minimal elements {0,1} and maximal
// elements {2,3}, relations 0<2, 1<2, 1<3: element 1 is the minimal below
// both maximals, element 2 the maximal above both minimals.
PosetPattern standard_pattern(const std::string& name);

PosetPattern n_pattern();

// All relation-preserving permutations of 0..k-1, each as an image vector,
// in lexicographic order. The identity comes first.
std::vector<std::vector<int>> pattern_automorphisms(const PosetPattern& p);

}  // namespace nsat
