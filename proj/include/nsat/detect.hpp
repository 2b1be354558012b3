#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nsat/family.hpp"
#include "nsat/pattern.hpp"

namespace nsat {

// map[i] = family member playing pattern element i.
using Embedding = std::vector<SubsetMask>;

// Strict-containment rows over the member indices of one family, plus the
// complement rows. Built once, shared by every detection query on the family.
struct RelTable {
  int m = 0;
  std::vector<IndexBits> up;      // up[i]: j with members[i] proper subset of members[j]
  std::vector<IndexBits> down;    // down[i]: j with members[j] proper subset of members[i]
  std::vector<IndexBits> incomp;  // neither, and j != i

  static RelTable build(const std::vector<SubsetMask>& members);
};

// All induced embeddings of p into f: injective maps where pattern relations
// hold iff the image masks are strictly nested the same way. Output is in
// lexicographic order of the map tuple under canonical mask order; a positive
// limit truncates to the first `limit` embeddings, limit 0 means all.
std::vector<Embedding> induced_embeddings(const SetFamily& f, const PosetPattern& p,
                                          std::size_t limit = 0);

// First embedding in the same order, or nullopt.
std::optional<Embedding> contains_induced(const SetFamily& f, const PosetPattern& p);

// Embeddings of p into f+{s} whose image uses s. Requires s not in f.
// Equals induced_embeddings(f+{s}, p) filtered to images containing s.
std::vector<Embedding> copies_through(const SetFamily& f, SubsetMask s,
                                      const PosetPattern& p);

// Existence-only variant of copies_through against a prebuilt table for f.
// up_s/down_s are the strict containment rows of the extra set s vs f.
bool adds_copy(const RelTable& table, const IndexBits& up_s, const IndexBits& down_s,
               const PosetPattern& p);

// Enumerating variant against a prebuilt table: every embedding whose image
// uses the extra set s. Same multiset as copies_through but enumerated by
// pinned pattern position, so the order differs; meant for the verifiers.
std::vector<Embedding> copies_with_extra(const RelTable& table,
                                         const std::vector<SubsetMask>& members,
                                         SubsetMask s, const IndexBits& up_s,
                                         const IndexBits& down_s, const PosetPattern& p);

// Rows of a candidate set s against f's members.
void relation_rows(const std::vector<SubsetMask>& members, SubsetMask s, IndexBits& up_s,
                   IndexBits& down_s);

}  // namespace nsat
