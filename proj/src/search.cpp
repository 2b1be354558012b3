#include "nsat/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace nsat {

SetFamily relabel(const SetFamily& f, const std::vector<int>& perm) {
  if (int(perm.size()) != f.n())
    throw std::invalid_argument("relabel: permutation size does not match n");
  std::vector<bool> seen(f.n() + 1, false);
  for (int v : perm) {
    if (v < 1 || v > f.n() || seen[v])
      throw std::invalid_argument("relabel: not a permutation of 1..n");
    seen[v] = true;
  }
  std::vector<SubsetMask> ms;
  ms.reserve(f.members.size());
  for (SubsetMask s : f.members) {
    SubsetMask t = 0;
    while (s) {
      int b = std::countr_zero(s);
      t |= element_bit(perm[b]);
      s &= s - 1;
    }
    ms.push_back(t);
  }
  return make_family(f.n(), std::move(ms));
}

namespace {

// Apply a permutation (1-based images) to the members, sort canonically, and
// report whether the result precedes `base` in family order.
bool relabels_below(const std::vector<SubsetMask>& base, const std::vector<int>& perm) {
  std::vector<SubsetMask> ms;
  ms.reserve(base.size());
  for (SubsetMask s : base) {
    SubsetMask t = 0;
    while (s) {
      int b = std::countr_zero(s);
      t |= element_bit(perm[b]);
      s &= s - 1;
    }
    ms.push_back(t);
  }
  std::sort(ms.begin(), ms.end(), mask_less);
  return std::lexicographical_compare(ms.begin(), ms.end(), base.begin(), base.end(),
                                      mask_less);
}

bool is_self_canonical(const std::vector<SubsetMask>& members, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (relabels_below(members, perm)) return false;
  return true;
}

}  // namespace

SetFamily canonical_form(const SetFamily& f) {
  if (f.n() > 10)
    throw std::invalid_argument("canonical_form: exact canonicalization capped at n <= 10");
  std::vector<int> perm(f.n());
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SubsetMask> best = f.members;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<SubsetMask> ms;
    ms.reserve(f.members.size());
    for (SubsetMask s : f.members) {
      SubsetMask t = 0;
      while (s) {
        int b = std::countr_zero(s);
        t |= element_bit(perm[b]);
        s &= s - 1;
      }
      ms.push_back(t);
    }
    std::sort(ms.begin(), ms.end(), mask_less);
    if (std::lexicographical_compare(ms.begin(), ms.end(), best.begin(), best.end(),
                                     mask_less))
      best = std::move(ms);
  }
  return SetFamily{f.ground, std::move(best)};
}

namespace {

// Isomorph rejection is a pure pruning aid; past this ground-set size the
// factorial canonicity test costs more than it saves.
constexpr int kCanonRejectMaxN = 7;
constexpr int kCanonRejectDepth = 3;

bool leaf_is_saturated(const std::vector<SubsetMask>& members, const RelTable& table,
                       int n, const PosetPattern& p) {
  bool blocked_everywhere = true;
  for_each_mask_canonical(n, [&](SubsetMask s) {
    if (!blocked_everywhere) return;
    if (std::binary_search(members.begin(), members.end(), s, mask_less)) return;
    IndexBits up_s, down_s;
    relation_rows(members, s, up_s, down_s);
    if (!adds_copy(table, up_s, down_s, p)) blocked_everywhere = false;
  });
  return blocked_everywhere;
}

struct LevelSearch {
  const std::vector<SubsetMask>& cand;
  const PosetPattern& p;
  int n;
  int k;
  bool reject_isomorphs;
  std::uint64_t cap;

  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<std::vector<SubsetMask>> found;

  LevelSearch(const std::vector<SubsetMask>& c, const PosetPattern& pat, int n_, int k_,
              bool reject, std::uint64_t cap_)
      : cand(c), p(pat), n(n_), k(k_), reject_isomorphs(reject), cap(cap_) {}

  // members holds the partial family (always canonically sorted: candidates
  // arrive in ascending canonical order). start is the next candidate index.
  void dfs(std::vector<SubsetMask>& members, int start) {
    if (aborted) return;
    if (++nodes > cap) {
      aborted = true;
      return;
    }
    const int remaining = k - int(members.size());
    if (remaining == 0) {
      RelTable table = RelTable::build(members);
      if (leaf_is_saturated(members, table, n, p)) found.push_back(members);
      return;
    }
    RelTable table = RelTable::build(members);
    for (int j = start; j + remaining <= int(cand.size()); ++j) {
      IndexBits up_s, down_s;
      relation_rows(members, cand[j], up_s, down_s);
      if (adds_copy(table, up_s, down_s, p)) continue;  // freeness prune
      members.push_back(cand[j]);
      if (reject_isomorphs && int(members.size()) <= kCanonRejectDepth &&
          !is_self_canonical(members, n)) {
        members.pop_back();
        continue;
      }
      dfs(members, j + 1);
      members.pop_back();
      if (aborted) return;
    }
  }
};

}  // namespace

SearchResult sat_star_exact(int n, const PosetPattern& p, int k_max,
                            std::uint64_t node_budget, int witness_limit) {
  if (n < 1 || n > 24) throw std::invalid_argument("sat_star_exact: n must be in 1..24");
  if (!validate_pattern(p)) throw std::invalid_argument("sat_star_exact: invalid pattern");
  if (k_max < 1) throw std::invalid_argument("sat_star_exact: k_max must be positive");
  if (node_budget == 0) throw std::invalid_argument("sat_star_exact: node budget must be positive");

  const auto t0 = std::chrono::steady_clock::now();
  SearchResult result;
  result.n = n;

  std::vector<SubsetMask> cand;
  cand.reserve(std::size_t(1) << n);
  for_each_mask_canonical(n, [&](SubsetMask s) { cand.push_back(s); });
  const bool reject = n <= kCanonRejectMaxN;
  k_max = std::min<long long>(k_max, (long long)cand.size());

  bool any_abort = false;
  // Target size 0 is a genuine candidate: the empty family is saturated for
  // the one-element pattern.
  for (int k = 0; k <= k_max; ++k) {
    std::uint64_t level_total = 0;
    std::vector<std::vector<SubsetMask>> level_found;
    bool level_abort = false;
    const std::uint64_t allowance =
        node_budget > result.nodes ? node_budget - result.nodes : 0;

    const int prefix_depth = std::min(2, k);
    if (prefix_depth < 2) {
      LevelSearch ls{cand, p, n, k, reject, allowance};
      std::vector<SubsetMask> members;
      ls.dfs(members, 0);
      level_total = ls.nodes;
      level_abort = ls.aborted;
      level_found = std::move(ls.found);
    } else {
      // Enumerate depth-2 prefixes serially, then hand each subtree to its
      // own worker. Every subtree keeps private node counts against the same
      // allowance, so the merged result never depends on scheduling.
      struct Prefix {
        std::vector<SubsetMask> members;
        int next;
      };
      std::vector<Prefix> prefixes;
      LevelSearch gen{cand, p, n, 2, reject, allowance};
      {
        std::vector<SubsetMask> members;
        // collect size-2 free canonical prefixes by running the same dfs with
        // k = 2 and harvesting leaves instead of saturation-checking them
        struct Collector {
          LevelSearch& ls;
          std::vector<Prefix>& out;
          int full_k;
          void walk(std::vector<SubsetMask>& members, int start) {
            if (ls.aborted) return;
            if (++ls.nodes > ls.cap) {
              ls.aborted = true;
              return;
            }
            if (int(members.size()) == 2) {
              out.push_back({members, start});
              return;
            }
            RelTable table = RelTable::build(members);
            const int remaining = full_k - int(members.size());
            for (int j = start; j + remaining <= int(ls.cand.size()); ++j) {
              IndexBits up_s, down_s;
              relation_rows(members, ls.cand[j], up_s, down_s);
              if (adds_copy(table, up_s, down_s, ls.p)) continue;
              members.push_back(ls.cand[j]);
              if (ls.reject_isomorphs && !is_self_canonical(members, ls.n)) {
                members.pop_back();
                continue;
              }
              walk(members, j + 1);
              members.pop_back();
              if (ls.aborted) return;
            }
          }
        } collector{gen, prefixes, k};
        collector.walk(members, 0);
      }
      level_total = gen.nodes;
      level_abort = gen.aborted;

      const int np = int(prefixes.size());
      std::vector<std::uint64_t> sub_nodes(np, 0);
      std::vector<std::uint8_t> sub_abort(np, 0);
      std::vector<std::vector<std::vector<SubsetMask>>> sub_found(np);
      if (!level_abort) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < np; ++i) {
          LevelSearch ls{cand, p, n, k, reject, allowance};
          std::vector<SubsetMask> members = prefixes[i].members;
          ls.dfs(members, prefixes[i].next);
          --ls.nodes;  // subtree root was already counted by the prefix pass
          sub_nodes[i] = ls.nodes;
          sub_abort[i] = ls.aborted;
          sub_found[i] = std::move(ls.found);
        }
        for (int i = 0; i < np; ++i) {
          level_total += sub_nodes[i];
          level_abort = level_abort || sub_abort[i];
          for (auto& fam : sub_found[i]) level_found.push_back(std::move(fam));
        }
      }
    }

    result.level_nodes.push_back(level_total);
    result.nodes += level_total;
    any_abort = any_abort || level_abort || result.nodes > node_budget;

    if (!level_found.empty()) {
      result.sat_star = k;
      result.exhaustive = !any_abort;
      // one canonical representative per isomorphism class
      std::vector<SetFamily> reps;
      for (auto& ms : level_found) {
        SetFamily fam{GroundSet{n}, std::move(ms)};
        reps.push_back(n <= 10 ? canonical_form(fam) : fam);
      }
      std::sort(reps.begin(), reps.end(),
                [](const SetFamily& a, const SetFamily& b) { return family_less(a, b); });
      reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
      if (int(reps.size()) > witness_limit) reps.resize(witness_limit);
      result.witnesses = std::move(reps);
      break;
    }
    if (any_abort) break;  // budget spent; nothing at this size is proven
  }

  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::vector<SetFamily> enumerate_minimum_saturated(int n, const PosetPattern& p, int limit) {
  if (limit < 1) throw std::invalid_argument("enumerate_minimum_saturated: limit must be positive");
  constexpr std::uint64_t kDefaultBudget = 200'000'000;
  SearchResult r = sat_star_exact(n, p, int(std::min<std::uint64_t>(
                                         std::uint64_t(1) << n, 4096)),
                                  kDefaultBudget, limit);
  if (!r.exhaustive)
    throw std::runtime_error(
        "enumerate_minimum_saturated: search was not exhaustive; raise the budget");
  if (int(r.witnesses.size()) > limit) r.witnesses.resize(limit);
  return r.witnesses;
}

}  // namespace nsat
