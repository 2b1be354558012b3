#pragma once

#include <cstdint>
#include <optional>

#include "nsat/detect.hpp"

namespace nsat {

bool is_pattern_free(const SetFamily& f, const PosetPattern& p);

struct SaturationReport {
  bool free = false;
  bool saturated = false;
  std::optional<Embedding> violating_copy;  // set iff !free
  std::vector<SubsetMask> unblocked;        // S not in f with f+{S} still free,
                                            // canonical order; empty iff !free
};

// Exhaustive saturation check: scans all 2^n candidate sets. Requires
// n <= 24. The default entry point runs the scan with OpenMP when available;
// the serial variant is the plain reference loop and always returns the
// identical report.
SaturationReport check_saturated(const SetFamily& f, const PosetPattern& p);
SaturationReport check_saturated_serial(const SetFamily& f, const PosetPattern& p);

// One pass over all subsets in canonical order, adding every set that keeps
// the family pattern-free. Output is p-saturated and contains the seed.
// Throws std::invalid_argument if the seed is not pattern-free or n > 24.
SetFamily greedy_saturate(const SetFamily& seed, const PosetPattern& p);

// Same pass over a seeded shuffle of the candidate order, for reproducible
// fuzzing. Identical rng_seed gives an identical family on every platform.
SetFamily greedy_saturate_shuffled(const SetFamily& seed, const PosetPattern& p,
                                   std::uint64_t rng_seed);

// {empty, [n]} + all singletons {i} + all prefixes {1..i}: 2n sets, and
// N-saturated for every n >= 3.
SetFamily canonical_construction(int n);

}  // namespace nsat
