#include <doctest.h>

#include <algorithm>

#include "nsat/io.hpp"
#include "nsat/saturate.hpp"
#include "nsat/verify.hpp"
#include "oracle.hpp"

using namespace nsat;
using nlohmann::json;

namespace {

SubsetMask mask_from_json(const json& arr) {
  SubsetMask m = 0;
  for (int e : arr) m |= element_bit(e);
  return m;
}

// Re-validate a valve certificate with subset tests only.
void check_valve_cert(const SetFamily& f, const ValveCertificate& c) {
  auto split = components(f);
  REQUIRE(c.component < int(split.parts.size()));
  const SetFamily& part = split.parts[c.component];
  CHECK(part.contains(c.m_min));
  CHECK(part.contains(c.m_max));
  CHECK(subset_leq(c.m_min, c.m_max));
  for (SubsetMask m : part.members) {
    CHECK(comparable(m, c.m_min));
    CHECK(comparable(m, c.m_max));
  }
  Extremes e = extremes(part);
  for (SubsetMask s : e.minimals) CHECK(subset_leq(s, c.m_min));
  for (SubsetMask s : e.maximals) CHECK(subset_leq(c.m_max, s));
}

}  // namespace

TEST_CASE("verifiers insist on an N-saturated input") {
  SetFamily not_saturated = make_family(3, {0, full_mask(3)});
  SetFamily not_free =
      make_family(3, {mask_of({1}), mask_of({3}), mask_of({1, 2}), mask_of({1, 3})});
  for (const SetFamily& f : {not_saturated, not_free}) {
    CHECK_THROWS_AS(verify_maxmin_comparability(f), std::invalid_argument);
    CHECK_THROWS_AS(verify_midpoint(f), std::invalid_argument);
    CHECK_THROWS_AS(verify_valve(f), std::invalid_argument);
    CHECK_THROWS_AS(find_valve(f), std::invalid_argument);
    CHECK_THROWS_AS(normalize_small_valve(f), std::invalid_argument);
    CHECK_THROWS_AS(verify_main_bounds(f), std::invalid_argument);
    CHECK_THROWS_AS(verify_extension_lemmas(f), std::invalid_argument);
    CHECK_THROWS_AS(verify_all(f), std::invalid_argument);
  }
}

TEST_CASE("the full suite holds on the canonical construction") {
  for (int n : {3, 4, 5}) {
    auto verdicts = verify_all(canonical_construction(n));
    REQUIRE(verdicts.size() == 6);
    const char* ids[] = {"maxmin-comparability", "midpoint-between-bounds",
                         "valve-comparability",  "pair-graph-forest",
                         "size-lower-bounds",    "extension-lemmas"};
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      CHECK(verdicts[i].lemma_id == ids[i]);
      CHECK(verdicts[i].holds);
      CHECK(verdicts[i].counterexample.is_null());
    }
  }
}

TEST_CASE("valves of the canonical construction") {
  SetFamily f = canonical_construction(3);
  auto valves = find_valve(f);
  REQUIRE(valves.size() == 2);
  CHECK(valves[0].component == 0);
  CHECK(valves[0].m_min == mask_of({1, 2}));
  CHECK(valves[0].m_max == mask_of({1, 2}));
  CHECK(valves[1].component == 1);
  CHECK(valves[1].m_min == mask_of({3}));
  CHECK(valves[1].m_max == mask_of({3}));
  for (const auto& c : valves) check_valve_cert(f, c);
}

TEST_CASE("singleton pairs of the canonical construction") {
  SetFamily f = canonical_construction(3);
  SingletonPairs sp = count_singleton_pairs(f);
  CHECK(sp.count == 3);
  REQUIRE(sp.pairs.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(sp.pairs[i].first == i + 1);
    CHECK(sp.pairs[i].second == 0);  // the empty set is the canonically first partner
  }
}

TEST_CASE("singleton pairs need no saturation precondition") {
  SetFamily f = make_family(3, {mask_of({2}), mask_of({1, 2}), mask_of({2, 3})});
  SingletonPairs sp = count_singleton_pairs(f);
  CHECK(sp.count == 2);  // i=1 via {2}, i=3 via {2}; no pair for i=2
  CHECK(sp.pairs[0] == std::pair<int, SubsetMask>{1, mask_of({2})});
  CHECK(sp.pairs[1] == std::pair<int, SubsetMask>{3, mask_of({2})});
}

TEST_CASE("pair graph is a forest with consistent certificates") {
  SetFamily f = canonical_construction(3);
  LemmaVerdict v = verify_pair_graph_forest(f);
  CHECK(v.holds);
  CHECK(v.certificates["count"] == 3);
  CHECK(v.certificates["vertices"] == 6);
  REQUIRE(v.certificates["edges"].size() == 3);
  for (const auto& e : v.certificates["edges"]) {
    SubsetMask lower = mask_from_json(e["lower"]);
    SubsetMask upper = mask_from_json(e["upper"]);
    int i = e["i"];
    CHECK(f.contains(lower));
    CHECK(f.contains(upper));
    CHECK(upper == (lower | element_bit(i)));
    CHECK_FALSE(has_element(lower, i));
  }
}

TEST_CASE("midpoint certificates carry a witness between the bounds") {
  SetFamily f = canonical_construction(4);
  LemmaVerdict v = verify_midpoint(f, 2, 2);
  CHECK(v.holds);
  REQUIRE_FALSE(v.certificates.empty());
  for (const auto& c : v.certificates) {
    SubsetMask uni = mask_from_json(c["union"]);
    SubsetMask inter = mask_from_json(c["intersection"]);
    SubsetMask wit = mask_from_json(c["witness"]);
    CHECK(subset_leq(uni, wit));
    CHECK(subset_leq(wit, inter));
    CHECK(f.contains(wit));
    for (const auto& g : c["uppers"]) CHECK(f.contains(mask_from_json(g)));
    for (const auto& g : c["lowers"]) CHECK(f.contains(mask_from_json(g)));
  }
  CHECK_THROWS_AS(verify_midpoint(f, 0, 2), std::invalid_argument);
}

TEST_CASE("maxmin certificates list the component extremes") {
  SetFamily f = canonical_construction(4);
  LemmaVerdict v = verify_maxmin_comparability(f);
  CHECK(v.holds);
  auto split = components(f);
  REQUIRE(v.certificates.size() == split.parts.size());
  for (const auto& c : v.certificates)
    for (const auto& mn : c["minimals"])
      for (const auto& mx : c["maximals"])
        CHECK(subset_leq(mask_from_json(mn), mask_from_json(mx)));
}

TEST_CASE("bounds hold with exact integers on the canonical construction") {
  LemmaVerdict v = verify_main_bounds(canonical_construction(3));
  CHECK(v.holds);
  REQUIRE(v.certificates.size() == 1);
  const auto& c = v.certificates[0];
  CHECK(c["n"] == 3);
  CHECK(c["family_size"] == 6);
  CHECK(c["flipped"] == false);
  CHECK(c["singleton_pairs"] == 3);
}

TEST_CASE("extension certificates respect the valve singleton bound") {
  SetFamily f = canonical_construction(3);
  LemmaVerdict v = verify_extension_lemmas(f);
  CHECK(v.holds);
  const auto& vsb = v.certificates["valve_singleton_bound"];
  REQUIRE(vsb.size() == 2);
  CHECK(vsb[0]["valve"] == json::array({1, 2}));
  CHECK(vsb[0]["count"] == 0);
  CHECK(vsb[1]["valve"] == json::array({3}));
  CHECK(vsb[1]["count"] == 2);
  for (const auto& entry : vsb) {
    CHECK(entry["bound"] == f.size() - 2);
    CHECK(int(entry["count"]) <= int(entry["bound"]));
  }
}

TEST_CASE("normalization always lands on a small valve") {
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      SetFamily f = greedy_saturate_shuffled(make_family(n, {}), n_pattern(), seed);
      // complements of saturated families are saturated: the pattern is self-dual
      for (const SetFamily& g : {f, complement_family(f)}) {
        CHECK(check_saturated(g, n_pattern()).saturated);
        auto [h, flipped] = normalize_small_valve(g);
        if (flipped)
          CHECK(h == complement_family(g));
        else
          CHECK(h == g);
        bool small = false;
        for (const auto& c : find_valve(h))
          if (2 * popcount(c.m_min) <= h.n()) small = true;
        CHECK(small);
      }
    }
  }
}

TEST_CASE("normalization complements a family whose valves are all large") {
  // every component valve of this completion has three of the five elements
  SetFamily f = greedy_saturate_shuffled(make_family(5, {}), n_pattern(), 41);
  for (const auto& c : find_valve(f)) CHECK(2 * popcount(c.m_min) > f.n());
  auto [h, flipped] = normalize_small_valve(f);
  CHECK(flipped);
  CHECK(h == complement_family(f));
  bool small = false;
  for (const auto& c : find_valve(h))
    if (2 * popcount(c.m_min) <= h.n()) small = true;
  CHECK(small);
}

TEST_CASE("the full suite holds on shuffled greedy completions") {
  for (int n : {3, 4, 5}) {
    for (std::uint64_t seed : {1, 2}) {
      SetFamily f = greedy_saturate_shuffled(make_family(n, {}), n_pattern(), seed);
      for (const auto& v : verify_all(f)) {
        CHECK(v.holds);
        CHECK(v.counterexample.is_null());
      }
      for (const auto& c : find_valve(f)) check_valve_cert(f, c);
    }
  }
}
