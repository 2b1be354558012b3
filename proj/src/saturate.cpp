#include "nsat/saturate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace nsat {

bool is_pattern_free(const SetFamily& f, const PosetPattern& p) {
  return !contains_induced(f, p).has_value();
}

namespace {

void require_enumerable(const SetFamily& f, const char* who) {
  if (f.n() > 24)
    throw std::invalid_argument(std::string(who) + ": subset enumeration capped at n <= 24");
}

SaturationReport check_impl(const SetFamily& f, const PosetPattern& p) {
  require_enumerable(f, "check_saturated");
  SaturationReport r;
  auto first = induced_embeddings(f, p, 1);
  if (!first.empty()) {
    r.free = false;
    r.saturated = false;
    r.violating_copy = first.front();
    return r;
  }
  r.free = true;

  const std::int64_t total = std::int64_t(1) << f.n();
  const RelTable table = RelTable::build(f.members);
  std::vector<std::uint8_t> unblocked_flag(total, 0);

  // Each candidate set is independent; flags keep the merge order-free.
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t v = 0; v < total; ++v) {
    SubsetMask s = SubsetMask(v);
    if (f.contains(s)) continue;
    IndexBits up_s, down_s;
    relation_rows(f.members, s, up_s, down_s);
    if (!adds_copy(table, up_s, down_s, p)) unblocked_flag[v] = 1;
  }

  for_each_mask_canonical(f.n(), [&](SubsetMask s) {
    if (unblocked_flag[s]) r.unblocked.push_back(s);
  });
  r.saturated = r.unblocked.empty();
  return r;
}

}  // namespace

SaturationReport check_saturated(const SetFamily& f, const PosetPattern& p) {
  return check_impl(f, p);
}

SaturationReport check_saturated_serial(const SetFamily& f, const PosetPattern& p) {
  require_enumerable(f, "check_saturated");
  SaturationReport r;
  auto first = induced_embeddings(f, p, 1);
  if (!first.empty()) {
    r.free = false;
    r.saturated = false;
    r.violating_copy = first.front();
    return r;
  }
  r.free = true;
  const RelTable table = RelTable::build(f.members);
  for_each_mask_canonical(f.n(), [&](SubsetMask s) {
    if (f.contains(s)) return;
    IndexBits up_s, down_s;
    relation_rows(f.members, s, up_s, down_s);
    if (!adds_copy(table, up_s, down_s, p)) r.unblocked.push_back(s);
  });
  r.saturated = r.unblocked.empty();
  return r;
}

namespace {

SetFamily greedy_over_order(const SetFamily& seed, const PosetPattern& p,
                            const std::vector<SubsetMask>& order) {
  if (!is_pattern_free(seed, p))
    throw std::invalid_argument("greedy_saturate: seed family is not pattern-free");
  std::vector<SubsetMask> members = seed.members;
  RelTable table = RelTable::build(members);
  for (SubsetMask s : order) {
    if (std::binary_search(members.begin(), members.end(), s, mask_less)) continue;
    IndexBits up_s, down_s;
    relation_rows(members, s, up_s, down_s);
    if (adds_copy(table, up_s, down_s, p)) continue;
    members.insert(std::upper_bound(members.begin(), members.end(), s, mask_less), s);
    table = RelTable::build(members);
  }
  return SetFamily{seed.ground, std::move(members)};
}

}  // namespace

SetFamily greedy_saturate(const SetFamily& seed, const PosetPattern& p) {
  require_enumerable(seed, "greedy_saturate");
  std::vector<SubsetMask> order;
  order.reserve(std::size_t(1) << seed.n());
  for_each_mask_canonical(seed.n(), [&](SubsetMask s) { order.push_back(s); });
  return greedy_over_order(seed, p, order);
}

SetFamily greedy_saturate_shuffled(const SetFamily& seed, const PosetPattern& p,
                                   std::uint64_t rng_seed) {
  require_enumerable(seed, "greedy_saturate");
  std::vector<SubsetMask> order;
  order.reserve(std::size_t(1) << seed.n());
  for_each_mask_canonical(seed.n(), [&](SubsetMask s) { order.push_back(s); });
  // Hand-rolled Fisher-Yates: std::shuffle's draw sequence is not pinned by
  // the standard, and shuffled corpora must reproduce bit-for-bit anywhere.
  std::mt19937_64 rng(rng_seed);
  for (std::size_t i = order.size() - 1; i > 0; --i)
    std::swap(order[i], order[rng() % (i + 1)]);
  return greedy_over_order(seed, p, order);
}

SetFamily canonical_construction(int n) {
  if (n < 1 || n > 63)
    throw std::invalid_argument("canonical_construction: n must be in 1..63");
  std::vector<SubsetMask> ms;
  ms.push_back(0);
  ms.push_back(full_mask(n));
  for (int i = 1; i <= n; ++i) ms.push_back(element_bit(i));
  for (int i = 2; i < n; ++i) ms.push_back(full_mask(i));
  return make_family(n, std::move(ms));
}

}  // namespace nsat
