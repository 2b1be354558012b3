#include "nsat/verify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "nsat/io.hpp"
#include "nsat/saturate.hpp"

namespace nsat {

using nlohmann::json;

namespace {

// N positions: 0,1 minimal, 2,3 maximal; 1 is the minimal below both
// maximals, 2 the maximal above both minimals.
constexpr int kMinA = 0, kMinBoth = 1, kMaxBoth = 2, kMaxB = 3;

void require_n_saturated(const SetFamily& f, const char* who) {
  auto rep = check_saturated(f, n_pattern());
  if (!rep.saturated)
    throw std::invalid_argument(std::string(who) + ": family is not N-saturated");
}

// ---- shared scans ----------------------------------------------------

struct ValveScan {
  bool has_candidate = false;
  SubsetMask m_min = 0, m_max = 0;
  bool min_comparable = true, max_comparable = true;
  SubsetMask bad_for_min = 0, bad_for_max = 0;
};

ValveScan scan_valve(const SetFamily& part) {
  ValveScan v;
  Extremes e = extremes(part);
  SubsetMask lower = 0, upper = ~SubsetMask{0};
  for (SubsetMask s : e.minimals) lower |= s;
  for (SubsetMask s : e.maximals) upper &= s;

  std::vector<SubsetMask> cands;
  for (SubsetMask m : part.members)
    if (subset_leq(lower, m) && subset_leq(m, upper)) cands.push_back(m);
  if (cands.empty()) return v;
  v.has_candidate = true;

  auto pick = [&](bool minimal) {
    for (SubsetMask c : cands) {
      bool extreme = true;
      for (SubsetMask d : cands) {
        if (d == c) continue;
        if (minimal ? subset_leq(d, c) : subset_leq(c, d)) {
          extreme = false;
          break;
        }
      }
      if (extreme) return c;  // cands are in canonical order
    }
    return cands.front();
  };
  v.m_min = pick(true);
  v.m_max = pick(false);

  for (SubsetMask m : part.members) {
    if (v.min_comparable && !comparable(m, v.m_min)) {
      v.min_comparable = false;
      v.bad_for_min = m;
    }
    if (v.max_comparable && !comparable(m, v.m_max)) {
      v.max_comparable = false;
      v.bad_for_max = m;
    }
  }
  return v;
}

// Distinct intersections (or unions) over tuples of up to max_arity members,
// with the first generating tuple kept for certificates.
std::map<SubsetMask, std::vector<SubsetMask>> distinct_folds(const SetFamily& f,
                                                             int max_arity,
                                                             bool intersect) {
  std::map<SubsetMask, std::vector<SubsetMask>> out;
  const auto& ms = f.members;
  const int m = int(ms.size());
  std::vector<int> idx;
  auto record = [&]() {
    SubsetMask v = intersect ? ~SubsetMask{0} : 0;
    std::vector<SubsetMask> gens;
    for (int i : idx) {
      v = intersect ? (v & ms[i]) : (v | ms[i]);
      gens.push_back(ms[i]);
    }
    out.try_emplace(v, std::move(gens));
  };
  // arity ascending, indices lexicographic: the kept tuple is the first seen
  for (int arity = 1; arity <= max_arity; ++arity) {
    idx.assign(arity, 0);
    for (int i = 0; i < arity; ++i) idx[i] = i;
    if (arity > m) break;
    for (;;) {
      record();
      int pos = arity - 1;
      while (pos >= 0 && idx[pos] == m - arity + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int q = pos + 1; q < arity; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return out;
}

// ---- individual checks (precondition already verified) ----------------

LemmaVerdict impl_maxmin(const SetFamily& f) {
  LemmaVerdict v{"maxmin-comparability", true, nullptr, json::array()};
  auto split = components(f);
  for (int c = 0; c < int(split.parts.size()); ++c) {
    Extremes e = extremes(split.parts[c]);
    for (SubsetMask s : e.minimals)
      for (SubsetMask t : e.maximals)
        if (!subset_leq(s, t)) {
          v.holds = false;
          v.counterexample = {{"component", c},
                              {"minimal", mask_to_json(s)},
                              {"maximal", mask_to_json(t)}};
          return v;
        }
    json mins = json::array(), maxs = json::array();
    for (SubsetMask s : e.minimals) mins.push_back(mask_to_json(s));
    for (SubsetMask s : e.maximals) maxs.push_back(mask_to_json(s));
    v.certificates.push_back(
        {{"component", c}, {"minimals", mins}, {"maximals", maxs}});
  }
  return v;
}

LemmaVerdict impl_midpoint(const SetFamily& f, int max_upper, int max_lower) {
  LemmaVerdict v{"midpoint-between-bounds", true, nullptr, json::array()};
  auto inters = distinct_folds(f, max_upper, true);
  auto unions = distinct_folds(f, max_lower, false);
  for (const auto& [uval, ugens] : unions) {
    for (const auto& [ival, igens] : inters) {
      if (!subset_leq(uval, ival)) continue;
      SubsetMask witness = 0;
      bool found = false;
      for (SubsetMask m : f.members)
        if (subset_leq(uval, m) && subset_leq(m, ival)) {
          witness = m;
          found = true;
          break;
        }
      json uppers = json::array(), lowers = json::array();
      for (SubsetMask g : igens) uppers.push_back(mask_to_json(g));
      for (SubsetMask g : ugens) lowers.push_back(mask_to_json(g));
      if (!found) {
        v.holds = false;
        v.counterexample = {{"uppers", uppers},
                            {"lowers", lowers},
                            {"intersection", mask_to_json(ival)},
                            {"union", mask_to_json(uval)}};
        return v;
      }
      v.certificates.push_back({{"uppers", uppers},
                                {"lowers", lowers},
                                {"intersection", mask_to_json(ival)},
                                {"union", mask_to_json(uval)},
                                {"witness", mask_to_json(witness)}});
    }
  }
  return v;
}

LemmaVerdict impl_valve(const SetFamily& f) {
  LemmaVerdict v{"valve-comparability", true, nullptr, json::array()};
  auto split = components(f);
  for (int c = 0; c < int(split.parts.size()); ++c) {
    ValveScan s = scan_valve(split.parts[c]);
    if (!s.has_candidate) {
      v.holds = false;
      v.counterexample = {{"component", c},
                          {"reason", "no member between the minimals and maximals"}};
      return v;
    }
    if (!s.min_comparable || !s.max_comparable) {
      v.holds = false;
      v.counterexample = {
          {"component", c},
          {"valve", mask_to_json(s.min_comparable ? s.m_max : s.m_min)},
          {"incomparable_member",
           mask_to_json(s.min_comparable ? s.bad_for_max : s.bad_for_min)}};
      return v;
    }
    v.certificates.push_back({{"component", c},
                              {"m_min", mask_to_json(s.m_min)},
                              {"m_max", mask_to_json(s.m_max)}});
  }
  return v;
}

std::vector<ValveCertificate> impl_find_valve(const SetFamily& f) {
  std::vector<ValveCertificate> out;
  auto split = components(f);
  for (int c = 0; c < int(split.parts.size()); ++c) {
    ValveScan s = scan_valve(split.parts[c]);
    if (!s.has_candidate || !s.min_comparable || !s.max_comparable)
      throw std::runtime_error("find_valve: component " + std::to_string(c) +
                               " refutes the valve property");
    out.push_back(ValveCertificate{c, s.m_min, s.m_max});
  }
  return out;
}

std::pair<SetFamily, bool> impl_normalize(const SetFamily& f) {
  auto valves = impl_find_valve(f);
  for (const auto& v : valves)
    if (2 * popcount(v.m_min) <= f.n()) return {f, false};
  SetFamily g = complement_family(f);
  auto flipped = impl_find_valve(g);
  for (const auto& v : flipped)
    if (2 * popcount(v.m_min) <= f.n()) return {g, true};
  throw std::runtime_error("normalize_small_valve: complement has no small valve");
}

LemmaVerdict impl_bounds(const SetFamily& f) {
  LemmaVerdict v{"size-lower-bounds", true, nullptr, json::array()};
  const int n = f.n(), m = f.size();
  auto [g, flipped] = impl_normalize(f);
  SingletonPairs sp = count_singleton_pairs(g);
  json numbers = {{"n", n},
                  {"family_size", m},
                  {"flipped", flipped},
                  {"singleton_pairs", sp.count}};
  auto fail = [&](const char* which) {
    v.holds = false;
    v.counterexample = numbers;
    v.counterexample["failed"] = which;
  };
  if (4 * m < n + 6)
    fail("4|F| >= n+6");
  else if (std::int64_t(m) * m < 4 * std::int64_t(n))
    fail("|F|^2 >= 4n");
  else if (2 * sp.count < n - 2 * m + 4)
    fail("2*pairs >= n-2|F|+4");
  else
    v.certificates.push_back(numbers);
  return v;
}

LemmaVerdict impl_extension(const SetFamily& f) {
  LemmaVerdict v{"extension-lemmas", true, nullptr,
                 json{{"witness_shape", json::array()},
                      {"valve_singleton_bound", json::array()},
                      {"position", json::array()}}};
  const PosetPattern p = n_pattern();
  const RelTable table = RelTable::build(f.members);
  const int n = f.n(), m = f.size();

  auto copies_of = [&](SubsetMask s) {
    IndexBits up_s, down_s;
    relation_rows(f.members, s, up_s, down_s);
    return copies_with_extra(table, f.members, s, up_s, down_s, p);
  };
  auto is_max_pos = [](const Embedding& e, SubsetMask s) {
    return e[kMaxBoth] == s || e[kMaxB] == s;
  };
  auto is_min_pos = [](const Embedding& e, SubsetMask s) {
    return e[kMinA] == s || e[kMinBoth] == s;
  };
  auto other_max = [](const Embedding& e, SubsetMask s) {
    return e[kMaxBoth] == s ? e[kMaxB] : e[kMaxBoth];
  };
  auto other_min = [](const Embedding& e, SubsetMask s) {
    return e[kMinA] == s ? e[kMinBoth] : e[kMinA];
  };

  // (a) sets below (above) a member that show up as maximal (minimal)
  // elements of created copies admit a copy staying under (over) that member
  bool failed = false;
  for_each_mask_canonical(n, [&](SubsetMask s) {
    if (failed || f.contains(s)) return;
    auto copies = copies_of(s);
    bool any_max = false, any_min = false;
    for (const auto& e : copies) {
      any_max = any_max || is_max_pos(e, s);
      any_min = any_min || is_min_pos(e, s);
    }
    for (SubsetMask a : f.members) {
      if (any_max && subset_leq(s, a) && s != a) {
        const Embedding* wit = nullptr;
        for (const auto& e : copies)
          if (is_max_pos(e, s) && subset_leq(other_max(e, s), a)) {
            wit = &e;
            break;
          }
        if (!wit) {
          v.holds = false;
          v.counterexample = {{"check", "witness_shape"},
                              {"added", mask_to_json(s)},
                              {"member", mask_to_json(a)}};
          failed = true;
          return;
        }
        v.certificates["witness_shape"].push_back({{"side", "upper"},
                                                   {"added", mask_to_json(s)},
                                                   {"member", mask_to_json(a)},
                                                   {"copy", embedding_to_json(*wit)}});
      }
      if (any_min && subset_leq(a, s) && s != a) {
        const Embedding* wit = nullptr;
        for (const auto& e : copies)
          if (is_min_pos(e, s) && subset_leq(a, other_min(e, s))) {
            wit = &e;
            break;
          }
        if (!wit) {
          v.holds = false;
          v.counterexample = {{"check", "witness_shape"},
                              {"added", mask_to_json(s)},
                              {"member", mask_to_json(a)}};
          failed = true;
          return;
        }
        v.certificates["witness_shape"].push_back({{"side", "lower"},
                                                   {"added", mask_to_json(s)},
                                                   {"member", mask_to_json(a)},
                                                   {"copy", embedding_to_json(*wit)}});
      }
    }
  });
  if (failed) return v;

  // (b) per component valve M, singletons i with M+{i} missing but maximal in
  // some created copy: at most |F|-2 of them, each with a copy of the pinned
  // shape (M+{i} doubly comparable maximal, M a minimal element)
  for (const auto& valve : impl_find_valve(f)) {
    const SubsetMask M = valve.m_min;
    int count = 0;
    json singles = json::array();
    for (int i = 1; i <= n; ++i) {
      if (has_element(M, i)) continue;
      const SubsetMask s = M | element_bit(i);
      if (f.contains(s)) continue;
      auto copies = copies_of(s);
      bool any_max = false;
      const Embedding* shaped = nullptr;
      for (const auto& e : copies) {
        if (!is_max_pos(e, s)) continue;
        any_max = true;
        if (e[kMaxBoth] == s && (e[kMinA] == M || e[kMinBoth] == M)) {
          shaped = &e;
          break;
        }
      }
      if (!any_max) continue;
      ++count;
      if (!shaped) {
        v.holds = false;
        v.counterexample = {{"check", "valve_singleton_bound"},
                            {"component", valve.component},
                            {"valve", mask_to_json(M)},
                            {"singleton", i}};
        return v;
      }
      singles.push_back({{"i", i}, {"copy", embedding_to_json(*shaped)}});
    }
    if (count > m - 2) {
      v.holds = false;
      v.counterexample = {{"check", "valve_singleton_bound"},
                          {"component", valve.component},
                          {"valve", mask_to_json(M)},
                          {"count", count},
                          {"bound", m - 2}};
      return v;
    }
    v.certificates["valve_singleton_bound"].push_back(
        {{"component", valve.component},
         {"valve", mask_to_json(M)},
         {"count", count},
         {"bound", m - 2},
         {"singletons", singles}});
  }

  // (c) missing intersections of <= 3 members land only in minimal positions
  // and somewhere as the doubly comparable minimal; unions dually
  for (bool intersect : {true, false}) {
    for (const auto& [value, gens] : distinct_folds(f, 3, intersect)) {
      if (f.contains(value)) continue;
      auto copies = copies_of(value);
      json jgens = json::array();
      for (SubsetMask g : gens) jgens.push_back(mask_to_json(g));
      if (copies.empty()) {
        v.holds = false;
        v.counterexample = {{"check", "position"},
                            {"set", mask_to_json(value)},
                            {"reason", "addition creates no copy"}};
        return v;
      }
      const Embedding* both = nullptr;
      for (const auto& e : copies) {
        if (intersect ? !is_min_pos(e, value) : !is_max_pos(e, value)) {
          v.holds = false;
          v.counterexample = {{"check", "position"},
                              {"set", mask_to_json(value)},
                              {"tuple", jgens},
                              {"copy", embedding_to_json(e)}};
          return v;
        }
        if (!both && (intersect ? e[kMinBoth] == value : e[kMaxBoth] == value)) both = &e;
      }
      if (!both) {
        v.holds = false;
        v.counterexample = {{"check", "position"},
                            {"set", mask_to_json(value)},
                            {"tuple", jgens},
                            {"reason", "no copy with the set doubly comparable"}};
        return v;
      }
      v.certificates["position"].push_back({{"side", intersect ? "intersection" : "union"},
                                            {"set", mask_to_json(value)},
                                            {"tuple", jgens},
                                            {"copy", embedding_to_json(*both)}});
    }
  }
  return v;
}

}  // namespace

LemmaVerdict verify_maxmin_comparability(const SetFamily& f) {
  require_n_saturated(f, "verify_maxmin_comparability");
  return impl_maxmin(f);
}

LemmaVerdict verify_midpoint(const SetFamily& f, int max_upper, int max_lower) {
  if (max_upper < 1 || max_lower < 1)
    throw std::invalid_argument("verify_midpoint: tuple arities must be positive");
  require_n_saturated(f, "verify_midpoint");
  return impl_midpoint(f, max_upper, max_lower);
}

LemmaVerdict verify_valve(const SetFamily& f) {
  require_n_saturated(f, "verify_valve");
  return impl_valve(f);
}

std::vector<ValveCertificate> find_valve(const SetFamily& f) {
  require_n_saturated(f, "find_valve");
  return impl_find_valve(f);
}

std::pair<SetFamily, bool> normalize_small_valve(const SetFamily& f) {
  require_n_saturated(f, "normalize_small_valve");
  return impl_normalize(f);
}

SingletonPairs count_singleton_pairs(const SetFamily& f) {
  SingletonPairs out;
  for (int i = 1; i <= f.n(); ++i) {
    for (SubsetMask s : f.members) {
      if (has_element(s, i)) continue;
      if (!f.contains(s | element_bit(i))) continue;
      out.pairs.emplace_back(i, s);
      ++out.count;
      break;
    }
  }
  return out;
}

LemmaVerdict verify_pair_graph_forest(const SetFamily& f) {
  LemmaVerdict v{"pair-graph-forest", true, nullptr, json::array()};
  SingletonPairs sp = count_singleton_pairs(f);

  auto index_of = [&](SubsetMask s) {
    return int(std::lower_bound(f.members.begin(), f.members.end(), s, mask_less) -
               f.members.begin());
  };
  std::vector<std::vector<int>> adj(f.size());
  json edges = json::array();
  for (auto [i, s] : sp.pairs) {
    const int a = index_of(s), b = index_of(s | element_bit(i));
    // cycle check: is b already reachable from a through earlier edges?
    std::vector<int> prev(f.size(), -1);
    std::queue<int> q;
    q.push(a);
    prev[a] = a;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (prev[y] == -1) {
          prev[y] = x;
          q.push(y);
        }
    }
    if (prev[b] != -1) {
      json cycle = json::array();
      for (int x = b; x != a; x = prev[x]) cycle.push_back(mask_to_json(f.members[x]));
      cycle.push_back(mask_to_json(f.members[a]));
      v.holds = false;
      v.counterexample = {{"closing_singleton", i}, {"cycle", cycle}};
      return v;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.push_back({{"i", i},
                     {"lower", mask_to_json(s)},
                     {"upper", mask_to_json(s | element_bit(i))}});
  }
  v.certificates = {{"edges", edges}, {"count", sp.count}, {"vertices", f.size()}};
  return v;
}

LemmaVerdict verify_main_bounds(const SetFamily& f) {
  require_n_saturated(f, "verify_main_bounds");
  return impl_bounds(f);
}

LemmaVerdict verify_extension_lemmas(const SetFamily& f) {
  require_n_saturated(f, "verify_extension_lemmas");
  return impl_extension(f);
}

std::vector<LemmaVerdict> verify_all(const SetFamily& f) {
  require_n_saturated(f, "verify_all");
  std::vector<LemmaVerdict> out;
  out.push_back(impl_maxmin(f));
  out.push_back(impl_midpoint(f, 3, 3));
  out.push_back(impl_valve(f));
  out.push_back(verify_pair_graph_forest(f));
  out.push_back(impl_bounds(f));
  out.push_back(impl_extension(f));
  return out;
}

}  // namespace nsat
