#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nsat/family.hpp"

namespace nsat {

// Outcome of one structural check on an N-saturated family. Certificates are
// machine-readable witnesses that can be re-validated with subset tests
// alone; counterexample is null when the check holds.
struct LemmaVerdict {
  std::string lemma_id;
  bool holds = true;
  nlohmann::json counterexample;
  nlohmann::json certificates;
};

struct ValveCertificate {
  int component = 0;       // index into components(f).parts
  SubsetMask m_min = 0;    // subset-minimal member comparable to the whole part
  SubsetMask m_max = 0;    // subset-maximal one; m_min is a subset of m_max
};

struct SingletonPairs {
  int count = 0;
  std::vector<std::pair<int, SubsetMask>> pairs;  // (i, S) with S, S+{i} members
};

// Every verifier below that states a structural theorem about N-saturated
// families first re-checks that precondition and throws std::invalid_argument
// if the input is not N-saturated.

// Within each component, every minimal member is a subset of every maximal one.
LemmaVerdict verify_maxmin_comparability(const SetFamily& f);

// For every pair of member tuples (uppers up to max_upper, lowers up to
// max_lower) with each lower inside each upper, some member M sits between
// the union of the lowers and the intersection of the uppers. Configurations
// are deduplicated by that (union, intersection) pair; (2,2) covers the
// butterfly case.
LemmaVerdict verify_midpoint(const SetFamily& f, int max_upper = 3, int max_lower = 3);

// Each component has a valve: a member between all its minimals and all its
// maximals, comparable to every member of the component. Checked for the
// subset-minimal and subset-maximal such members.
LemmaVerdict verify_valve(const SetFamily& f);

// The valves themselves, canonically smallest representatives. Throws
// std::runtime_error if a component refutes the valve property (impossible
// for genuinely N-saturated input).
std::vector<ValveCertificate> find_valve(const SetFamily& f);

// Returns (f, false) if some component valve m_min has size <= n/2, else
// (complement_family(f), true); the output always has a small valve.
std::pair<SetFamily, bool> normalize_small_valve(const SetFamily& f);

// For each i in [n], the canonically first member S with i not in S and
// S+{i} also a member. No precondition.
SingletonPairs count_singleton_pairs(const SetFamily& f);

// The graph on members with one edge {S, S+{i}} per counted singleton is
// acyclic. No precondition.
LemmaVerdict verify_pair_graph_forest(const SetFamily& f);

// Exact integer forms of the size bounds: 4|F| >= n+6, |F|^2 >= 4n, and
// after small-valve normalization 2*count_singleton_pairs >= n - 2|F| + 4.
LemmaVerdict verify_main_bounds(const SetFamily& f);

// Witness-shape facts about sets added to a saturated family:
// (a) if A' (not a member, below member A) is maximal in some created copy,
//     a copy exists whose other maximal element is inside A; dually below.
// (b) per component valve M: singletons i with M+{i} missing and maximal in
//     some created copy number at most |F|-2, and each admits a copy with
//     M+{i} as the doubly-comparable maximal and M a minimal.
// (c) a missing intersection of <= 3 members is minimal in every created
//     copy and doubly-comparable minimal in some copy; dually for unions.
LemmaVerdict verify_extension_lemmas(const SetFamily& f);

// The full suite in a fixed order; the saturation precondition is checked
// once up front.
std::vector<LemmaVerdict> verify_all(const SetFamily& f);

}  // namespace nsat
