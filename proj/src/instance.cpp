#include "fairdiv/instance.hpp"

#include <numeric>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

Rational row_sum(const std::vector<Rational>& row) {
  Rational total = 0;
  for (const auto& v : row) total += v;
  return total;
}

}  // namespace

void validate_instance(const Instance& inst) {
  if (inst.n < 2) throw ValidationError("n: must be at least 2");
  if (inst.type_split < 1 || inst.type_split >= inst.n)
    throw ValidationError("type_split: must lie in [1, n-1]");
  if (inst.u_first.size() != inst.u_second.size())
    throw ValidationError("u_second: length differs from u_first");
  for (const auto& v : inst.u_first)
    if (v < 0) throw ValidationError("u_first: negative utility");
  for (const auto& v : inst.u_second)
    if (v < 0) throw ValidationError("u_second: negative utility");
  if (inst.normalized) {
    if (row_sum(inst.u_first) != 1)
      throw ValidationError("u_first: values do not sum to 1 as claimed by `normalized`");
    if (row_sum(inst.u_second) != 1)
      throw ValidationError("u_second: values do not sum to 1 as claimed by `normalized`");
  }
}

ReducedInstance strip_zero_items(const Instance& inst) {
  ReducedInstance out;
  out.inst = inst;
  out.inst.u_first.clear();
  out.inst.u_second.clear();
  for (int g = 0; g < inst.item_count(); ++g) {
    if (inst.u_first[g] == 0 && inst.u_second[g] == 0) {
      out.dropped.push_back(g);
    } else {
      out.kept.push_back(g);
      out.inst.u_first.push_back(inst.u_first[g]);
      out.inst.u_second.push_back(inst.u_second[g]);
    }
  }
  return out;
}

Allocation restore_items(const Allocation& reduced_alloc, const ReducedInstance& reduction) {
  Allocation out = Allocation::empty(reduced_alloc.agent_count());
  for (int i = 0; i < reduced_alloc.agent_count(); ++i) {
    for (int g : reduced_alloc.bundles[i]) out.bundles[i].insert(reduction.kept[g]);
  }
  out.bundles[0].insert(reduction.dropped.begin(), reduction.dropped.end());
  return out;
}

CanonicalThree canonicalize_three(const Instance& inst) {
  CanonicalThree out;
  out.inst = inst;
  if (inst.type_split == 2) {
    out.swapped = true;
    std::swap(out.inst.u_first, out.inst.u_second);
    out.inst.type_split = 1;
  }
  return out;
}

Allocation decanonicalize_three(const Allocation& alloc, bool swapped) {
  if (!swapped) return alloc;
  // Canonical agent 0 was the original agent 2; canonical 1 and 2 were the
  // original agents 0 and 1.
  Allocation out = Allocation::empty(3);
  out.bundles[0] = alloc.bundles[1];
  out.bundles[1] = alloc.bundles[2];
  out.bundles[2] = alloc.bundles[0];
  return out;
}

}  // namespace fairdiv
