#pragma once

#include <string>

#include <json.hpp>

#include "nsat/family.hpp"
#include "nsat/pattern.hpp"

namespace nsat {

// {"n":3,"sets":[[],[1],[2],[3],[1,2],[1,2,3]]} with 1-based elements.
// Rejects malformed JSON, out-of-range n or elements, duplicate elements
// within a set, and duplicate sets; throws std::invalid_argument.
SetFamily parse_family(const std::string& text);

// Canonical serialization: members in (cardinality, value) order, elements
// ascending, compact one-line JSON plus trailing newline. parse_family of
// the output reproduces the family exactly.
std::string serialize_family(const SetFamily& f);

// {"k":4,"less":[[0,2],[1,2],[1,3]]} with 0-based elements. The relation is
// transitively closed after parsing; cycles are rejected.
PosetPattern parse_pattern(const std::string& text);

// Hasse diagram as a DOT digraph: one edge per cover pair, nodes labeled
// {a,b,...}, one rank per cardinality.
std::string export_dot(const SetFamily& f);

// JSON building blocks shared with the verifiers.
nlohmann::json mask_to_json(SubsetMask s);
nlohmann::json family_to_json(const SetFamily& f);
nlohmann::json embedding_to_json(const std::vector<SubsetMask>& e);

}  // namespace nsat
