#include "nsat/pattern.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace nsat {

int PosetPattern::related_pairs() const {
  int c = 0;
  for (int i = 0; i < k; ++i) c += std::popcount(below[i]);
  return c;
}

bool validate_pattern(const PosetPattern& p) {
  if (p.k < 1 || p.k > kMaxPatternSize) return false;
  for (int i = 0; i < p.k; ++i)
    if (p.below[i] >> p.k) return false;  // relation leaks past k elements
  for (int i = p.k; i < kMaxPatternSize; ++i)
    if (p.below[i]) return false;
  for (int i = 0; i < p.k; ++i) {
    if (p.less(i, i)) return false;
    for (int j = 0; j < p.k; ++j) {
      if (p.less(i, j) && p.less(j, i)) return false;
      for (int t = 0; t < p.k; ++t)
        if (p.less(i, j) && p.less(j, t) && !p.less(i, t)) return false;
    }
  }
  return true;
}

namespace {

PosetPattern from_pairs(int k, std::initializer_list<std::pair<int, int>> pairs) {
  PosetPattern p;
  p.k = k;
  for (auto [a, b] : pairs) p.below[a] |= std::uint8_t(1) << b;
  return p;
}

}  // namespace

PosetPattern n_pattern() { return from_pairs(4, {{0, 2}, {1, 2}, {1, 3}}); }

PosetPattern standard_pattern(const std::string& name) {
  if (name == "N") return n_pattern();
  if (name == "butterfly") return from_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  if (name == "diamond")
    return from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  if (name == "chevron") return from_pairs(3, {{0, 2}, {1, 2}});
  if (name == "vee") return from_pairs(3, {{0, 1}, {0, 2}});

  auto parametric = [&](const std::string& prefix) -> int {
    if (name.size() < prefix.size() + 3 || name.compare(0, prefix.size(), prefix) != 0 ||
        name[prefix.size()] != '(' || name.back() != ')')
      return -1;
    int k = 0;
    for (std::size_t i = prefix.size() + 1; i + 1 < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return -1;
      k = k * 10 + (name[i] - '0');
      if (k > 99) return -1;
    }
    return k;
  };

  if (int k = parametric("antichain"); k != -1) {
    if (k < 1 || k > kMaxPatternSize)
      throw std::invalid_argument("standard_pattern: antichain size out of 1..8");
    PosetPattern p;
    p.k = k;
    return p;
  }
  if (int k = parametric("chain"); k != -1) {
    if (k < 1 || k > kMaxPatternSize)
      throw std::invalid_argument("standard_pattern: chain length out of 1..8");
    PosetPattern p;
    p.k = k;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) p.below[i] |= std::uint8_t(1) << j;
    return p;
  }
  throw std::invalid_argument("standard_pattern: unknown pattern '" + name + "'");
}

std::vector<std::vector<int>> pattern_automorphisms(const PosetPattern& p) {
  std::vector<int> perm(p.k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < p.k && ok; ++i)
      for (int j = 0; j < p.k && ok; ++j)
        if (p.less(i, j) != p.less(perm[i], perm[j])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace nsat
