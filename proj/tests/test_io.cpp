#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "nsat/io.hpp"
#include "nsat/saturate.hpp"

using namespace nsat;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("serialize_family produces the canonical one-liner") {
  CHECK(serialize_family(canonical_construction(3)) ==
        "{\"n\":3,\"sets\":[[],[1],[2],[3],[1,2],[1,2,3]]}\n");
  CHECK(serialize_family(make_family(2, {})) == "{\"n\":2,\"sets\":[]}\n");
}

TEST_CASE("parse_family accepts unsorted input and canonicalizes") {
  SetFamily f = parse_family("{\"sets\":[[2],[1],[2,1,3]],\"n\":3}");
  CHECK(f.n() == 3);
  CHECK(f.members ==
        std::vector<SubsetMask>{mask_of({1}), mask_of({2}), mask_of({1, 2, 3})});
  CHECK(serialize_family(f) == "{\"n\":3,\"sets\":[[1],[2],[1,2,3]]}\n");
}

TEST_CASE("round-trip is the identity on random families") {
  std::mt19937_64 rng(8128);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + int(rng() % 6);
    std::vector<SubsetMask> ms;
    const int sz = int(rng() % 12);
    for (int i = 0; i < sz; ++i) ms.push_back(rng() & full_mask(n));
    SetFamily f = make_family(n, ms);
    CHECK(parse_family(serialize_family(f)) == f);
    // and serialization is a fixed point after one pass
    CHECK(serialize_family(parse_family(serialize_family(f))) == serialize_family(f));
  }
}

TEST_CASE("parse_family rejects malformed input") {
  const char* bad[] = {
      "{",                                      // not JSON
      "[]",                                     // not an object
      "{\"n\":3}",                              // missing sets
      "{\"sets\":[]}",                          // missing n
      "{\"n\":0,\"sets\":[]}",                  // n too small
      "{\"n\":64,\"sets\":[]}",                 // n too large
      "{\"n\":\"3\",\"sets\":[]}",              // n not an integer
      "{\"n\":3,\"sets\":5}",                   // sets not an array
      "{\"n\":3,\"sets\":[5]}",                 // a set must be an array
      "{\"n\":3,\"sets\":[[\"1\"]]}",           // element not an integer
      "{\"n\":3,\"sets\":[[0]]}",               // element below 1
      "{\"n\":3,\"sets\":[[4]]}",               // element above n
      "{\"n\":3,\"sets\":[[1,1]]}",             // duplicate element
      "{\"n\":3,\"sets\":[[1],[1]]}",           // duplicate set
      "{\"n\":3,\"sets\":[[2,1],[1,2]]}",       // duplicate set, reordered
      "{\"n\":1,\"sets\":[]} trailing",         // garbage after the object
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_family(text), std::invalid_argument);
  }
}

TEST_CASE("parse_pattern reads the relation and closes it transitively") {
  PosetPattern p = parse_pattern("{\"k\":4,\"less\":[[0,2],[1,2],[1,3]]}");
  CHECK(p == n_pattern());
  PosetPattern chain = parse_pattern("{\"k\":3,\"less\":[[0,1],[1,2]]}");
  CHECK(chain == standard_pattern("chain(3)"));
  PosetPattern anti = parse_pattern("{\"k\":2,\"less\":[]}");
  CHECK(anti == standard_pattern("antichain(2)"));
}

TEST_CASE("parse_pattern rejects malformed or cyclic relations") {
  const char* bad[] = {
      "{",
      "{\"k\":4}",
      "{\"less\":[]}",
      "{\"k\":0,\"less\":[]}",
      "{\"k\":9,\"less\":[]}",
      "{\"k\":3,\"less\":[[0]]}",
      "{\"k\":3,\"less\":[[0,3]]}",
      "{\"k\":3,\"less\":[[-1,0]]}",
      "{\"k\":3,\"less\":[[1,1]]}",
      "{\"k\":2,\"less\":[[0,1],[1,0]]}",
      "{\"k\":3,\"less\":[[0,1],[1,2],[2,0]]}",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_pattern(text), std::invalid_argument);
  }
}

TEST_CASE("json building blocks") {
  CHECK(mask_to_json(mask_of({2, 4})) == json::array({2, 4}));
  CHECK(mask_to_json(0) == json::array());
  json fam = family_to_json(canonical_construction(3));
  CHECK(fam["n"] == 3);
  CHECK(fam["sets"][4] == json::array({1, 2}));
  json emb = embedding_to_json({mask_of({1}), mask_of({1, 2})});
  CHECK(emb == json::array({json::array({1}), json::array({1, 2})}));
}

TEST_CASE("dot export of the canonical construction matches the golden file") {
  const std::string got = export_dot(canonical_construction(3));
  CHECK(got == slurp(std::filesystem::path(NSAT_GOLDEN_DIR) / "canonical3.dot"));
  // structural sanity on a second family: one arrow per cover pair
  SetFamily f = make_family(4, {0, mask_of({1}), mask_of({2}), mask_of({1, 2})});
  const std::string dot = export_dot(f);
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2))
    ++arrows;
  CHECK(arrows == hasse_edges(f).size());
}

TEST_CASE("golden corpus round-trips byte for byte") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(NSAT_GOLDEN_DIR)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("fam_", 0) != 0) continue;
    ++seen;
    CAPTURE(name);
    const std::string text = slurp(entry.path());
    SetFamily f = parse_family(text);
    CHECK(serialize_family(f) == text);
  }
  CHECK(seen == 10);
}
