#include "nsat/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nsat {

bool SetFamily::contains(SubsetMask s) const {
  return std::binary_search(members.begin(), members.end(), s, mask_less);
}

SetFamily make_family(int n, std::vector<SubsetMask> masks) {
  if (n < 1 || n > 63) throw std::invalid_argument("make_family: n must be in 1..63");
  for (SubsetMask m : masks)
    if (!subset_leq(m, full_mask(n)))
      throw std::invalid_argument("make_family: mask has elements outside the ground set");
  std::sort(masks.begin(), masks.end(), mask_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return SetFamily{GroundSet{n}, std::move(masks)};
}

SubsetMask mask_of(std::initializer_list<int> elements) {
  SubsetMask m = 0;
  for (int i : elements) m |= element_bit(i);
  return m;
}

bool family_less(const SetFamily& a, const SetFamily& b) {
  return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                      b.members.begin(), b.members.end(), mask_less);
}

std::vector<std::pair<SubsetMask, SubsetMask>> hasse_edges(const SetFamily& f) {
  const auto& ms = f.members;
  const int m = f.size();
  std::vector<std::pair<SubsetMask, SubsetMask>> out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || !subset_leq(ms[i], ms[j]) || ms[i] == ms[j]) continue;
      bool cover = true;
      for (int t = 0; t < m && cover; ++t)
        if (t != i && t != j && subset_leq(ms[i], ms[t]) && subset_leq(ms[t], ms[j]) &&
            ms[t] != ms[i] && ms[t] != ms[j])
          cover = false;
      if (cover) out.emplace_back(ms[i], ms[j]);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return mask_less(a.first, b.first) ||
           (a.first == b.first && mask_less(a.second, b.second));
  });
  return out;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns false if already joined
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

ComponentSplit components(const SetFamily& f) {
  ComponentSplit out;
  out.contains_empty = f.contains(0);
  out.contains_full = f.contains(full_mask(f.n()));

  std::vector<SubsetMask> mid;
  for (SubsetMask s : f.members)
    if (s != 0 && s != full_mask(f.n())) mid.push_back(s);

  const int m = int(mid.size());
  Dsu dsu(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (comparable(mid[i], mid[j])) dsu.unite(i, j);

  // mid is canonically sorted, so grouping by root and emitting groups in
  // first-member order keeps everything deterministic.
  std::vector<int> root_order;
  std::vector<std::vector<SubsetMask>> groups(m);
  for (int i = 0; i < m; ++i) {
    int r = dsu.find(i);
    if (groups[r].empty()) root_order.push_back(r);
    groups[r].push_back(mid[i]);
  }
  for (int r : root_order)
    out.parts.push_back(SetFamily{f.ground, std::move(groups[r])});
  return out;
}

SetFamily complement_family(const SetFamily& f) {
  std::vector<SubsetMask> ms;
  ms.reserve(f.members.size());
  for (SubsetMask s : f.members) ms.push_back(full_mask(f.n()) & ~s);
  return make_family(f.n(), std::move(ms));
}

Extremes extremes(const SetFamily& f) {
  Extremes e;
  for (SubsetMask s : f.members) {
    bool has_below = false, has_above = false;
    for (SubsetMask t : f.members) {
      if (t == s) continue;
      if (subset_leq(t, s)) has_below = true;
      if (subset_leq(s, t)) has_above = true;
    }
    if (!has_below) e.minimals.push_back(s);
    if (!has_above) e.maximals.push_back(s);
  }
  return e;
}

}  // namespace nsat
