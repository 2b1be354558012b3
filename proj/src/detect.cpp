#include "nsat/detect.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsat {

RelTable RelTable::build(const std::vector<SubsetMask>& members) {
  RelTable t;
  t.m = int(members.size());
  t.up.assign(t.m, IndexBits(t.m));
  t.down.assign(t.m, IndexBits(t.m));
  t.incomp.assign(t.m, IndexBits(t.m, true));
  for (int i = 0; i < t.m; ++i) t.incomp[i].reset(i);
  for (int i = 0; i < t.m; ++i) {
    for (int j = i + 1; j < t.m; ++j) {
      // members are distinct, so subset_leq here is strict
      if (subset_leq(members[i], members[j])) {
        t.up[i].set(j);
        t.down[j].set(i);
        t.incomp[i].reset(j);
        t.incomp[j].reset(i);
      } else if (subset_leq(members[j], members[i])) {
        t.up[j].set(i);
        t.down[i].set(j);
        t.incomp[i].reset(j);
        t.incomp[j].reset(i);
      }
    }
  }
  return t;
}

void relation_rows(const std::vector<SubsetMask>& members, SubsetMask s, IndexBits& up_s,
                   IndexBits& down_s) {
  const int m = int(members.size());
  up_s = IndexBits(m);
  down_s = IndexBits(m);
  for (int i = 0; i < m; ++i) {
    if (members[i] == s) continue;
    if (subset_leq(s, members[i]))
      up_s.set(i);
    else if (subset_leq(members[i], s))
      down_s.set(i);
  }
}

namespace {

// Backtracker over pattern elements in index order so that completed maps
// come out in lexicographic order. assign[t] is a member index, or the
// sentinel `virt` for the one virtual extra element in adds_copy mode.
struct Matcher {
  const RelTable& table;
  const PosetPattern& p;
  const IndexBits* up_s = nullptr;
  const IndexBits* down_s = nullptr;
  IndexBits incomp_s;  // derived from up_s/down_s when present
  int virt = -1;       // pattern position pinned to the virtual element, -1 if none

  std::array<int, kMaxPatternSize> assign{};
  std::vector<std::vector<int>> found;  // member-index tuples
  std::size_t limit = 0;
  bool stop_at_first = false;

  Matcher(const RelTable& t, const PosetPattern& pat) : table(t), p(pat) {}

  const IndexBits& row(int rel_kind, int idx) const {
    // rel_kind: 0 below, 1 above, 2 incomparable (relative to assigned idx)
    if (idx >= 0) {
      if (rel_kind == 0) return table.down[idx];
      if (rel_kind == 1) return table.up[idx];
      return table.incomp[idx];
    }
    if (rel_kind == 0) return *down_s;
    if (rel_kind == 1) return *up_s;
    return incomp_s;
  }

  bool dfs(int t) {
    if (t == p.k) {
      found.emplace_back(assign.begin(), assign.begin() + p.k);
      return stop_at_first || (limit && found.size() >= limit);
    }
    if (t == virt) {
      // the pinned element still has to relate correctly to everything
      // assigned so far
      for (int a = 0; a < t; ++a) {
        const int idx = assign[a];
        const bool ok = p.less(t, a)   ? up_s->test(idx)
                        : p.less(a, t) ? down_s->test(idx)
                                       : incomp_s.test(idx);
        if (!ok) return false;
      }
      return dfs(t + 1);
    }
    IndexBits cand(table.m, true);
    for (int a = 0; a < t; ++a) {
      int idx = (a == virt) ? -1 : assign[a];
      int kind = p.less(t, a) ? 0 : p.less(a, t) ? 1 : 2;
      cand &= row(kind, idx);
    }
    bool done = false;
    cand.for_each([&](int idx) {
      if (done) return;
      assign[t] = idx;
      if (dfs(t + 1)) done = true;
    });
    return done;
  }
};

}  // namespace

std::vector<Embedding> induced_embeddings(const SetFamily& f, const PosetPattern& p,
                                          std::size_t limit) {
  if (!validate_pattern(p)) throw std::invalid_argument("induced_embeddings: invalid pattern");
  std::vector<Embedding> out;
  if (f.size() < p.k) return out;
  RelTable table = RelTable::build(f.members);
  Matcher m(table, p);
  m.limit = limit;
  m.dfs(0);
  out.reserve(m.found.size());
  for (const auto& tup : m.found) {
    Embedding e(p.k);
    for (int i = 0; i < p.k; ++i) e[i] = f.members[tup[i]];
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Embedding> contains_induced(const SetFamily& f, const PosetPattern& p) {
  auto one = induced_embeddings(f, p, 1);
  if (one.empty()) return std::nullopt;
  return one.front();
}

std::vector<Embedding> copies_through(const SetFamily& f, SubsetMask s,
                                      const PosetPattern& p) {
  if (f.contains(s))
    throw std::invalid_argument("copies_through: s is already a member of the family");
  std::vector<SubsetMask> merged = f.members;
  merged.insert(std::upper_bound(merged.begin(), merged.end(), s, mask_less), s);
  SetFamily g{f.ground, std::move(merged)};
  std::vector<Embedding> out;
  for (auto& e : induced_embeddings(g, p, 0))
    if (std::find(e.begin(), e.end(), s) != e.end()) out.push_back(std::move(e));
  return out;
}

bool adds_copy(const RelTable& table, const IndexBits& up_s, const IndexBits& down_s,
               const PosetPattern& p) {
  if (table.m + 1 < p.k) return false;
  Matcher m(table, p);
  m.up_s = &up_s;
  m.down_s = &down_s;
  m.incomp_s = IndexBits(table.m, true);
  for (std::size_t b = 0; b < m.incomp_s.w.size(); ++b)
    m.incomp_s.w[b] &= ~(up_s.w[b] | down_s.w[b]);
  m.stop_at_first = true;
  for (int pos = 0; pos < p.k; ++pos) {
    m.virt = pos;
    m.found.clear();
    if (m.dfs(0)) return true;
  }
  return false;
}

std::vector<Embedding> copies_with_extra(const RelTable& table,
                                         const std::vector<SubsetMask>& members,
                                         SubsetMask s, const IndexBits& up_s,
                                         const IndexBits& down_s, const PosetPattern& p) {
  std::vector<Embedding> out;
  if (table.m + 1 < p.k) return out;
  Matcher m(table, p);
  m.up_s = &up_s;
  m.down_s = &down_s;
  m.incomp_s = IndexBits(table.m, true);
  for (std::size_t b = 0; b < m.incomp_s.w.size(); ++b)
    m.incomp_s.w[b] &= ~(up_s.w[b] | down_s.w[b]);
  // s appears exactly once per embedding, so pinning each position in turn
  // hits every copy exactly once
  for (int pos = 0; pos < p.k; ++pos) {
    m.virt = pos;
    m.found.clear();
    m.dfs(0);
    for (const auto& tup : m.found) {
      Embedding e(p.k);
      for (int i = 0; i < p.k; ++i) e[i] = (i == pos) ? s : members[tup[i]];
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace nsat
