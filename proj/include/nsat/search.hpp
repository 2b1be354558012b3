#pragma once

#include <cstdint>
#include <vector>

#include "nsat/saturate.hpp"

namespace nsat {

// Lexicographically least relabeling of f under permutations of [n], member
// lists compared in canonical mask order. Exact; enumerates S_n with early
// abort, so it is capped at n <= 10.
SetFamily canonical_form(const SetFamily& f);

SetFamily relabel(const SetFamily& f, const std::vector<int>& perm);  // perm[i-1] = image of i

struct SearchResult {
  int n = 0;
  int sat_star = -1;  // -1: no saturated family found within k_max/budget
  bool exhaustive = false;
  std::vector<SetFamily> witnesses;  // canonical representatives, family order
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> level_nodes;  // nodes spent per target size
  double seconds = 0.0;
};

// Minimum p-saturated family size by iterative deepening on the target size:
// for each k the DFS walks free families in canonical order (freeness prunes,
// prefix-canonicity rejects isomorphs at depths <= 3, leaves are filtered by
// an exhaustive saturation check). Requires 1 <= n <= 24 and a valid pattern.
//
// exhaustive means every level up to the answer ran to completion within the
// node budget; only then are sat_star and the witness classes proven minimal
// and complete. Results are deterministic for fixed inputs regardless of
// thread count: subtrees carry their own node accounting, so the budget can
// be overshot by in-flight subtrees but never changes the outcome.
SearchResult sat_star_exact(int n, const PosetPattern& p, int k_max,
                            std::uint64_t node_budget, int witness_limit = 64);

// Up to `limit` minimum saturated families, one canonical representative per
// isomorphism class, in family order. Runs sat_star_exact internally and
// throws std::runtime_error if that search was not exhaustive.
std::vector<SetFamily> enumerate_minimum_saturated(int n, const PosetPattern& p, int limit);

}  // namespace nsat
