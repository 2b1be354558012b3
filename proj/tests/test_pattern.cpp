#include <doctest.h>

#include <stdexcept>

#include "nsat/pattern.hpp"

using namespace nsat;

TEST_CASE("the four-element N pattern") {
  PosetPattern p = n_pattern();
  CHECK(p.k == 4);
  CHECK(p.less(0, 2));
  CHECK(p.less(1, 2));
  CHECK(p.less(1, 3));
  CHECK_FALSE(p.less(0, 3));
  CHECK_FALSE(p.less(0, 1));
  CHECK_FALSE(p.less(2, 3));
  CHECK(p.related_pairs() == 3);
  CHECK(validate_pattern(p));
}

TEST_CASE("standard pattern shapes") {
  CHECK(standard_pattern("N") == n_pattern());
  CHECK(standard_pattern("butterfly").related_pairs() == 4);
  CHECK(standard_pattern("diamond").related_pairs() == 5);
  CHECK(standard_pattern("chevron").related_pairs() == 2);
  CHECK(standard_pattern("vee").related_pairs() == 2);
  CHECK(standard_pattern("butterfly").k == 4);
  CHECK(standard_pattern("diamond").k == 4);
  CHECK(standard_pattern("chevron").k == 3);
  CHECK(standard_pattern("vee").k == 3);
  for (const char* name : {"N", "butterfly", "diamond", "chevron", "vee"})
    CHECK(validate_pattern(standard_pattern(name)));
}

TEST_CASE("parametric chains and antichains") {
  for (int k = 1; k <= 8; ++k) {
    PosetPattern c = standard_pattern("chain(" + std::to_string(k) + ")");
    CHECK(c.k == k);
    CHECK(c.related_pairs() == k * (k - 1) / 2);
    CHECK(validate_pattern(c));
    PosetPattern a = standard_pattern("antichain(" + std::to_string(k) + ")");
    CHECK(a.k == k);
    CHECK(a.related_pairs() == 0);
    CHECK(validate_pattern(a));
  }
  CHECK_THROWS_AS(standard_pattern("chain(0)"), std::invalid_argument);
  CHECK_THROWS_AS(standard_pattern("chain(9)"), std::invalid_argument);
  CHECK_THROWS_AS(standard_pattern("zigzag"), std::invalid_argument);
  CHECK_THROWS_AS(standard_pattern("antichain()"), std::invalid_argument);
  CHECK_THROWS_AS(standard_pattern("chain(12a)"), std::invalid_argument);
}

TEST_CASE("validate_pattern rejects broken relations") {
  PosetPattern refl = n_pattern();
  refl.below[2] |= std::uint8_t(1) << 2;  // 2 < 2
  CHECK_FALSE(validate_pattern(refl));

  PosetPattern sym = n_pattern();
  sym.below[2] |= std::uint8_t(1) << 0;  // both 0 < 2 and 2 < 0
  CHECK_FALSE(validate_pattern(sym));

  PosetPattern open_chain;  // 0 < 1 < 2 without 0 < 2
  open_chain.k = 3;
  open_chain.below[0] = 0b010;
  open_chain.below[1] = 0b100;
  CHECK_FALSE(validate_pattern(open_chain));

  PosetPattern stray = n_pattern();
  stray.below[5] = 1;  // relation bits past k
  CHECK_FALSE(validate_pattern(stray));

  PosetPattern empty;
  CHECK_FALSE(validate_pattern(empty));  // k = 0
}

TEST_CASE("automorphism groups of the standard patterns") {
  auto order = [](const char* name) {
    return pattern_automorphisms(standard_pattern(name)).size();
  };
  CHECK(order("N") == 1);
  CHECK(order("butterfly") == 4);
  CHECK(order("diamond") == 2);
  CHECK(order("chevron") == 2);
  CHECK(order("vee") == 2);
  CHECK(order("antichain(3)") == 6);
  CHECK(order("chain(5)") == 1);
}

TEST_CASE("automorphisms really preserve the relation") {
  for (const char* name : {"N", "butterfly", "diamond", "chevron", "antichain(4)"}) {
    PosetPattern p = standard_pattern(name);
    auto autos = pattern_automorphisms(p);
    REQUIRE_FALSE(autos.empty());
    for (int i = 0; i < p.k; ++i) CHECK(autos.front()[i] == i);
    for (const auto& perm : autos)
      for (int i = 0; i < p.k; ++i)
        for (int j = 0; j < p.k; ++j)
          CHECK(p.less(i, j) == p.less(perm[i], perm[j]));
  }
}
