#include "fairdiv/predicates.hpp"

#include "fairdiv/preference.hpp"

namespace fairdiv {

Rational utility(const Instance& inst, int agent, const std::set<int>& bundle) {
  const auto& row = inst.row(agent);
  Rational total = 0;
  for (int g : bundle) total += row[g];
  return total;
}

bool envies(const Instance& inst, const Allocation& alloc, int i, int k) {
  return utility(inst, i, alloc.bundles[i]) < utility(inst, i, alloc.bundles[k]);
}

bool strongly_envies(const Instance& inst, const Allocation& alloc, int i, int k) {
  const auto& theirs = alloc.bundles[k];
  if (theirs.empty()) return false;
  const auto& row = inst.row(i);
  Rational their_value = 0;
  Rational best_item = 0;
  for (int g : theirs) {
    their_value += row[g];
    if (row[g] > best_item) best_item = row[g];
  }
  return utility(inst, i, alloc.bundles[i]) < their_value - best_item;
}

bool is_envied(const Instance& inst, const Allocation& alloc, int agent) {
  for (int i = 0; i < alloc.agent_count(); ++i) {
    if (i != agent && envies(inst, alloc, i, agent)) return true;
  }
  return false;
}

bool is_ef1(const Instance& inst, const Allocation& alloc) {
  const int n = alloc.agent_count();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (i != k && strongly_envies(inst, alloc, i, k)) return false;
    }
  }
  return true;
}

bool precedes(const Instance& inst, const std::set<int>& a, const std::set<int>& b) {
  // Lowest-ranked item of a\b must still weakly beat the highest-ranked item
  // of b\a.
  bool have_low = false;
  int lowest_of_a = -1;
  for (int g : a) {
    if (b.count(g)) continue;
    if (!have_low || compare_preference(inst, g, lowest_of_a) == Ordering::less) {
      lowest_of_a = g;
      have_low = true;
    }
  }
  if (!have_low) return true;
  bool have_high = false;
  int highest_of_b = -1;
  for (int g : b) {
    if (a.count(g)) continue;
    if (!have_high || compare_preference(inst, g, highest_of_b) == Ordering::greater) {
      highest_of_b = g;
      have_high = true;
    }
  }
  if (!have_high) return true;
  return compare_preference(inst, lowest_of_a, highest_of_b) != Ordering::less;
}

bool is_good(const Instance& inst, const Allocation& alloc) {
  for (int s = 0; s < inst.type_split; ++s) {
    for (int t = inst.type_split; t < alloc.agent_count(); ++t) {
      if (!precedes(inst, alloc.bundles[s], alloc.bundles[t])) return false;
    }
  }
  return true;
}

Rational delta(const Instance& inst, const std::set<int>& bundle) {
  Rational d = 0;
  for (int g : bundle) d += inst.u_first[g] - inst.u_second[g];
  return d;
}

Rational social_welfare(const Instance& inst, const Allocation& alloc) {
  Rational total = 0;
  for (int i = 0; i < alloc.agent_count(); ++i) total += utility(inst, i, alloc.bundles[i]);
  return total;
}

}  // namespace fairdiv
