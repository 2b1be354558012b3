#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "nsat/bits.hpp"

namespace nsat {

struct GroundSet {
  int n = 0;
};

// A finite family of subsets of [n], kept strictly sorted in canonical
// (cardinality, value) order. n <= 63 always; operations that enumerate all
// 2^n subsets additionally require n <= 24.
struct SetFamily {
  GroundSet ground;
  std::vector<SubsetMask> members;

  int n() const { return ground.n; }
  int size() const { return int(members.size()); }
  bool contains(SubsetMask s) const;
  bool operator==(const SetFamily& o) const {
    return ground.n == o.ground.n && members == o.members;
  }
};

// Sorts canonically and drops duplicates. Throws std::invalid_argument if n
// is out of range or a mask has bits outside [n].
SetFamily make_family(int n, std::vector<SubsetMask> masks);

// Convenience for tests and fixtures: {{1,3},{2}} etc., 1-based elements.
SubsetMask mask_of(std::initializer_list<int> elements);

// Lexicographic comparison of member lists under canonical mask order.
bool family_less(const SetFamily& a, const SetFamily& b);

// Cover pairs (x, y): x proper subset of y with no member strictly between.
// Output sorted by (x, y) in canonical mask order.
std::vector<std::pair<SubsetMask, SubsetMask>> hasse_edges(const SetFamily& f);

struct ComponentSplit {
  std::vector<SetFamily> parts;  // ordered by canonically least member
  bool contains_empty = false;
  bool contains_full = false;
};

// Connected components of the comparability graph on f minus {empty, [n]}.
ComponentSplit components(const SetFamily& f);

// {[n] \ S : S in f}, re-canonicalized.
SetFamily complement_family(const SetFamily& f);

struct Extremes {
  std::vector<SubsetMask> minimals;
  std::vector<SubsetMask> maximals;
};

// Members with no proper subset (resp. superset) inside f.
Extremes extremes(const SetFamily& f);

}  // namespace nsat
