#include "nsat/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nsat {

using nlohmann::json;

namespace {

json parse_text(const std::string& text, const char* who) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(who) + ": malformed JSON: " + e.what());
  }
}

}  // namespace

SetFamily parse_family(const std::string& text) {
  json j = parse_text(text, "parse_family");
  if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
    throw std::invalid_argument("parse_family: expected an object with 'n' and 'sets'");
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("parse_family: 'n' must be an integer");
  const long long n = j["n"].get<long long>();
  if (n < 1 || n > 63) throw std::invalid_argument("parse_family: n must be in 1..63");
  if (!j["sets"].is_array())
    throw std::invalid_argument("parse_family: 'sets' must be an array");

  std::vector<SubsetMask> masks;
  for (const auto& jset : j["sets"]) {
    if (!jset.is_array())
      throw std::invalid_argument("parse_family: each set must be an array of elements");
    SubsetMask m = 0;
    for (const auto& je : jset) {
      if (!je.is_number_integer())
        throw std::invalid_argument("parse_family: elements must be integers");
      const long long e = je.get<long long>();
      if (e < 1 || e > n)
        throw std::invalid_argument("parse_family: element " + std::to_string(e) +
                                    " outside 1.." + std::to_string(n));
      if (has_element(m, int(e)))
        throw std::invalid_argument("parse_family: duplicate element " + std::to_string(e) +
                                    " within a set");
      m |= element_bit(int(e));
    }
    masks.push_back(m);
  }
  std::vector<SubsetMask> sorted = masks;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("parse_family: duplicate set");
  return make_family(int(n), std::move(masks));
}

json mask_to_json(SubsetMask s) {
  json arr = json::array();
  while (s) {
    arr.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return arr;
}

json family_to_json(const SetFamily& f) {
  json sets = json::array();
  for (SubsetMask s : f.members) sets.push_back(mask_to_json(s));
  return json{{"n", f.n()}, {"sets", sets}};
}

json embedding_to_json(const std::vector<SubsetMask>& e) {
  json arr = json::array();
  for (SubsetMask s : e) arr.push_back(mask_to_json(s));
  return arr;
}

std::string serialize_family(const SetFamily& f) { return family_to_json(f).dump() + "\n"; }

PosetPattern parse_pattern(const std::string& text) {
  json j = parse_text(text, "parse_pattern");
  if (!j.is_object() || !j.contains("k") || !j.contains("less"))
    throw std::invalid_argument("parse_pattern: expected an object with 'k' and 'less'");
  if (!j["k"].is_number_integer())
    throw std::invalid_argument("parse_pattern: 'k' must be an integer");
  const long long k = j["k"].get<long long>();
  if (k < 1 || k > kMaxPatternSize)
    throw std::invalid_argument("parse_pattern: k must be in 1..8");
  if (!j["less"].is_array())
    throw std::invalid_argument("parse_pattern: 'less' must be an array of pairs");

  PosetPattern p;
  p.k = int(k);
  for (const auto& jp : j["less"]) {
    if (!jp.is_array() || jp.size() != 2 || !jp[0].is_number_integer() ||
        !jp[1].is_number_integer())
      throw std::invalid_argument("parse_pattern: each relation must be a pair [a,b]");
    const long long a = jp[0].get<long long>(), b = jp[1].get<long long>();
    if (a < 0 || a >= k || b < 0 || b >= k)
      throw std::invalid_argument("parse_pattern: relation element outside 0..k-1");
    if (a == b) throw std::invalid_argument("parse_pattern: relation a<a is not allowed");
    p.below[a] |= std::uint8_t(1) << b;
  }
  // transitive closure, then reject anything cyclic
  for (int t = 0; t < p.k; ++t)
    for (int i = 0; i < p.k; ++i)
      if (p.less(i, t)) p.below[i] |= p.below[t];
  for (int i = 0; i < p.k; ++i)
    if (p.less(i, i))
      throw std::invalid_argument("parse_pattern: relation contains a cycle");
  return p;
}

namespace {

std::string node_label(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  while (s) {
    if (!first) out += ",";
    out += std::to_string(std::countr_zero(s) + 1);
    first = false;
    s &= s - 1;
  }
  return out + "}";
}

}  // namespace

std::string export_dot(const SetFamily& f) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  int card = -1;
  bool open = false;
  for (SubsetMask s : f.members) {
    if (popcount(s) != card) {
      if (open) os << " }\n";
      card = popcount(s);
      os << "  { rank=same;";
      open = true;
    }
    os << " \"" << node_label(s) << "\";";
  }
  if (open) os << " }\n";
  for (const auto& [x, y] : hasse_edges(f))
    os << "  \"" << node_label(x) << "\" -> \"" << node_label(y) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace nsat
