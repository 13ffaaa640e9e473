#include "fairdiv/unnormalized_three.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairdiv/errors.hpp"
#include "fairdiv/predicates.hpp"
#include "fairdiv/subroutines.hpp"

namespace fairdiv {

namespace {

Rational sum_second(const Instance& inst, const std::set<int>& items) {
  Rational total = 0;
  for (int g : items) total += inst.u_second[g];
  return total;
}

Rational total_second(const Instance& inst) {
  Rational total = 0;
  for (const auto& v : inst.u_second) total += v;
  return total;
}

// Smallest prefix length of the order whose second-type mass reaches the
// threshold; 0 when the threshold is already met by the empty prefix.
int shortest_covering_prefix(const Instance& inst, const std::vector<int>& order,
                             const Rational& threshold) {
  Rational sum = 0;
  int len = 0;
  while (sum < threshold) {
    if (len == static_cast<int>(order.size()))
      throw std::logic_error("critical set: threshold exceeds the available mass");
    sum += inst.u_second[order[len]];
    ++len;
  }
  return len;
}

}  // namespace

CriticalCase classify_critical_case(const Instance& inst, const std::set<int>& members,
                                    const std::vector<int>& sequence) {
  Rational set_first = 0;
  Rational best_first = 0;
  for (int g : members) {
    set_first += inst.u_first[g];
    if (inst.u_first[g] > best_first) best_first = inst.u_first[g];
  }
  if (2 * best_first >= set_first) return CriticalCase::dominant_item;

  const int k = static_cast<int>(members.size());
  const int boundary = sequence[k - 1];
  const Rational outside = total_second(inst) - sum_second(inst, members);
  return inst.u_second[boundary] > outside ? CriticalCase::heavy_last : CriticalCase::light_last;
}

CriticalSet build_critical_set(const Instance& inst, const PreferenceOrder& pref, int item) {
  if (inst.n != 3 || inst.type_split != 1)
    throw ValidationError("critical set: expects three agents with type_split 1");

  const Rational all_second = total_second(inst);
  Rational x_second = 0;
  for (int p = 0; p < pref.x_count; ++p) x_second += inst.u_second[pref.order[p]];

  const Rational item_second = inst.u_second[item];
  const bool item_in_x = pref.position[item] < pref.x_count;
  const Rational x_without_item = x_second - (item_in_x ? item_second : Rational(0));
  const Rational third_of_rest = (all_second - item_second) / 3;
  const int rank = pref.position[item] + 1;  // 1-based position in the order

  CriticalSet cs;
  cs.target_item = item;

  const int t = shortest_covering_prefix(inst, pref.order,
                                         std::min(x_without_item, third_of_rest));
  if (t < rank) {
    cs.members.insert(pref.order.begin(), pref.order.begin() + t);
    cs.members.insert(item);
  } else {
    const Rational threshold = std::min(x_second, Rational(third_of_rest + item_second));
    const int t2 = shortest_covering_prefix(inst, pref.order, threshold);
    cs.members.insert(pref.order.begin(), pref.order.begin() + t2);
  }
  cs.size = static_cast<int>(cs.members.size());
  cs.sequence = pref.order;

  Rational set_first = 0;
  Rational best_first = 0;
  for (int g : cs.members) {
    set_first += inst.u_first[g];
    if (inst.u_first[g] > best_first) best_first = inst.u_first[g];
  }
  if (2 * best_first >= set_first) {
    cs.label = CriticalCase::dominant_item;
    return cs;
  }

  // No single member carries half the set, hence the set has at least three
  // members and a reordering step applies: when the target item trails the
  // set it moves to slot |K|-1, shifting the displaced items back by one.
  if (cs.size < 3) throw std::logic_error("critical set: undominated set with fewer than 3 items");
  if (rank >= cs.size) {
    cs.sequence.erase(cs.sequence.begin() + (rank - 1));
    cs.sequence.insert(cs.sequence.begin() + (cs.size - 2), item);
  }
  if (cs.sequence[cs.size - 1] == item)
    throw std::logic_error("critical set: target item ended up on the boundary slot");

  // The first |K|-1 slots stay strictly below a third of the remaining mass
  // plus the target's own value; the downstream welfare bounds lean on this.
  Rational head = 0;
  for (int p = 0; p + 1 < cs.size; ++p) head += inst.u_second[cs.sequence[p]];
  if (!(head < third_of_rest + item_second))
    throw std::logic_error("critical set: head mass bound violated");

  cs.label = classify_critical_case(inst, cs.members, cs.sequence);
  return cs;
}

void validate_well_defined(const Instance& inst, const WellDefinedAllocation& wd) {
  static const std::array<int, 3> kIdentity{0, 1, 2};
  static const std::array<int, 3> kRolled{2, 0, 1};
  if (wd.permutation != kIdentity && wd.permutation != kRolled)
    throw ValidationError("well-defined allocation: unsupported permutation");
  if (!is_ef1(inst, wd.alloc)) throw ValidationError("well-defined allocation: not EF1");

  Rational ref_first = 0, ref_second = 0;
  for (int g : wd.reference_set) {
    ref_first += inst.u_first[g];
    ref_second += inst.u_second[g];
  }
  if (2 * utility(inst, 0, wd.alloc.bundles[0]) < ref_first)
    throw ValidationError("well-defined allocation: first bundle below half the reference value");
  if (utility(inst, 2, wd.alloc.bundles[0]) > ref_second)
    throw ValidationError("well-defined allocation: first bundle exceeds the reference mass");

  const auto [i1, i2, i3] = wd.permutation;
  if (envies(inst, wd.alloc, i1, i2) || envies(inst, wd.alloc, i1, i3) ||
      envies(inst, wd.alloc, i2, i3))
    throw ValidationError("well-defined allocation: forward envy under the permutation");
}

Allocation complete_well_defined(const Instance& inst, const WellDefinedAllocation& wd) {
  validate_well_defined(inst, wd);

  std::set<int> pool;
  const auto assigned = wd.alloc.assigned_items();
  for (int g = 0; g < inst.item_count(); ++g) {
    if (!assigned.count(g)) pool.insert(g);
  }
  const std::vector<int> order{wd.permutation[2], wd.permutation[1], wd.permutation[0]};
  Allocation out = round_robin(inst, wd.alloc, pool, order);

  Rational ref_first = 0, ref_second = 0;
  for (int g : wd.reference_set) {
    ref_first += inst.u_first[g];
    ref_second += inst.u_second[g];
  }
  const Rational floor = ref_first + (total_second(inst) - ref_second);
  if (2 * social_welfare(inst, out) < floor)
    throw std::logic_error("well-defined completion: welfare floor violated");
  if (!is_ef1(inst, out)) throw std::logic_error("well-defined completion: output not EF1");
  return out;
}

TwoPointerFill heavy_last_fill(const Instance& inst, const CriticalSet& cs,
                               const SolverHooks& hooks) {
  const auto& seq = cs.sequence;
  const int k = cs.size;
  const int m = static_cast<int>(seq.size());

  TwoPointerFill st;
  st.alloc = Allocation::empty(3);
  st.alloc.bundles[0].insert(seq[0]);
  st.alloc.bundles[2].insert(seq[k - 1]);
  hooks.step(inst, st.alloc);

  st.front = 2;
  st.back = m;
  while (st.front < k && k < st.back) {
    if (!envies(inst, st.alloc, 1, 0)) {
      st.alloc.bundles[0].insert(seq[st.front - 1]);
      ++st.front;
    } else {
      st.alloc.bundles[1].insert(seq[st.back - 1]);
      --st.back;
    }
    hooks.step(inst, st.alloc);
  }
  return st;
}

Allocation assign_leftover_middle(const Instance& inst, Allocation alloc,
                                  const std::vector<int>& sequence, int front, int back,
                                  const SolverHooks& hooks) {
  while (front <= back) {
    if (!is_envied(inst, alloc, 0)) {
      alloc.bundles[0].insert(sequence[front - 1]);
      ++front;
    } else if (!is_envied(inst, alloc, 1)) {
      alloc.bundles[1].insert(sequence[back - 1]);
      --back;
    } else {
      for (int p = front; p <= back; ++p) alloc.bundles[0].insert(sequence[p - 1]);
      front = back + 1;
    }
    hooks.step(inst, alloc);
  }
  return alloc;
}

Allocation swap_first_pair_if_better(const Instance& inst, Allocation alloc) {
  if (utility(inst, 0, alloc.bundles[0]) >= utility(inst, 0, alloc.bundles[1])) return alloc;
  Allocation swapped = alloc;
  std::swap(swapped.bundles[0], swapped.bundles[1]);
  return social_welfare(inst, swapped) > social_welfare(inst, alloc) ? swapped : alloc;
}

Allocation solve_heavy_last(const Instance& inst, const CriticalSet& cs,
                            const SolverHooks& hooks) {
  auto st = heavy_last_fill(inst, cs, hooks);
  const int k = cs.size;
  if (st.front == k && k < st.back) {
    const std::vector<int> pool(cs.sequence.begin() + k, cs.sequence.begin() + st.back);
    return ece_complete(inst, st.alloc, pool, {}, hooks.on_rotation);
  }
  Allocation alloc =
      assign_leftover_middle(inst, st.alloc, cs.sequence, st.front, k - 1, hooks);
  return swap_first_pair_if_better(inst, alloc);
}

ThreePointerFill light_last_fill(const Instance& inst, const CriticalSet& cs,
                                 const SolverHooks& hooks) {
  const auto& seq = cs.sequence;
  const int k = cs.size;

  ThreePointerFill st;
  st.alloc = Allocation::empty(3);
  st.alloc.bundles[0].insert(seq[0]);
  st.alloc.bundles[1].insert(seq[k - 1]);
  hooks.step(inst, st.alloc);

  st.front = 2;
  st.back = k - 1;
  st.tail = static_cast<int>(seq.size());
  while (st.front <= st.back && st.tail >= k + 1) {
    if (!is_envied(inst, st.alloc, 0)) {
      st.alloc.bundles[0].insert(seq[st.front - 1]);
      ++st.front;
    } else if (!is_envied(inst, st.alloc, 1)) {
      st.alloc.bundles[1].insert(seq[st.back - 1]);
      --st.back;
    } else {
      // With the first two agents both envied, agent 2 cannot be envied.
      st.alloc.bundles[2].insert(seq[st.tail - 1]);
      --st.tail;
    }
    hooks.step(inst, st.alloc);
  }
  return st;
}

WellDefinedAllocation shuffle_to_well_defined(const Instance& inst, const Allocation& alloc,
                                              const std::set<int>& reference_set) {
  std::set<int> first_two;
  first_two.insert(alloc.bundles[0].begin(), alloc.bundles[0].end());
  first_two.insert(alloc.bundles[1].begin(), alloc.bundles[1].end());
  if (first_two != reference_set)
    throw std::logic_error("shuffle: bundles 0 and 1 must partition the reference set");
  for (int g : alloc.bundles[2]) {
    if (reference_set.count(g))
      throw std::logic_error("shuffle: bundle 2 overlaps the reference set");
  }

  Allocation a = alloc;
  if (utility(inst, 0, a.bundles[0]) < utility(inst, 0, a.bundles[1]))
    std::swap(a.bundles[0], a.bundles[1]);
  const auto& b0 = a.bundles[0];
  const auto& b1 = a.bundles[1];
  const auto& b2 = a.bundles[2];

  const bool zero_envies_two = envies(inst, a, 0, 2);
  const bool two_envies_zero = envies(inst, a, 2, 0);

  WellDefinedAllocation wd;
  wd.reference_set = reference_set;
  wd.alloc = Allocation::empty(3);
  if (zero_envies_two && two_envies_zero) {
    wd.alloc.bundles[0] = b2;
    if (utility(inst, 2, b1) >= utility(inst, 2, b0)) {
      wd.alloc.bundles[1] = b1;
      wd.alloc.bundles[2] = b0;
    } else {
      wd.alloc.bundles[1] = b0;
      wd.alloc.bundles[2] = b1;
    }
  } else if (!zero_envies_two) {
    wd.alloc.bundles[0] = b0;
    if (utility(inst, 2, b1) >= utility(inst, 2, b2)) {
      wd.alloc.bundles[1] = b1;
      wd.alloc.bundles[2] = b2;
    } else {
      wd.alloc.bundles[1] = b2;
      wd.alloc.bundles[2] = b1;
    }
  } else if (utility(inst, 2, b1) >= utility(inst, 2, b2)) {
    wd.alloc.bundles[0] = b2;
    wd.alloc.bundles[1] = b1;
    wd.alloc.bundles[2] = b0;
  } else {
    wd.alloc = a;
    wd.permutation = {2, 0, 1};
  }
  validate_well_defined(inst, wd);
  return wd;
}

Allocation solve_light_last(const Instance& inst, const CriticalSet& cs,
                            const SolverHooks& hooks) {
  auto st = light_last_fill(inst, cs, hooks);
  if (st.front > st.back) {
    const auto wd = shuffle_to_well_defined(inst, st.alloc, cs.members);
    return complete_well_defined(inst, wd);
  }

  // Tail reached the set boundary: agent 2 has swallowed everything outside
  // the set, and what bundle 0 plus the leftovers hold of the second type's
  // value stays below a third of the mass away from the target item.
  Rational inside = utility(inst, 2, st.alloc.bundles[0]);
  for (int p = st.front; p <= st.back; ++p) inside += inst.u_second[cs.sequence[p - 1]];
  const Rational away = total_second(inst) - inst.u_second[cs.target_item];
  bool target_counted = st.alloc.bundles[0].count(cs.target_item) > 0;
  for (int p = st.front; p <= st.back && !target_counted; ++p)
    target_counted = cs.sequence[p - 1] == cs.target_item;
  if (target_counted) inside -= inst.u_second[cs.target_item];
  if (!(inside < away / 3))
    throw std::logic_error("light-last fill: inside mass bound violated");

  Allocation alloc =
      assign_leftover_middle(inst, st.alloc, cs.sequence, st.front, st.back, hooks);
  return swap_first_pair_if_better(inst, alloc);
}

namespace {

// When the first type values at most two items, handing those to the two
// second-type agents (one each) and splitting the rest between them yields a
// complete EF1 allocation worth the full second-type mass. This covers the
// instances whose optima leave agent 0 empty, where no per-item candidate
// can reach half the optimum.
std::optional<Allocation> type2_only_allocation(const Instance& inst,
                                                const RotationHook& on_rotation) {
  std::vector<int> positive;
  for (int g = 0; g < inst.item_count(); ++g) {
    if (inst.u_first[g] > 0) positive.push_back(g);
  }
  if (positive.size() > 2) return std::nullopt;

  Allocation start = Allocation::empty(3);
  if (!positive.empty()) start.bundles[1].insert(positive[0]);
  if (positive.size() == 2) start.bundles[2].insert(positive[1]);

  std::vector<int> pool;
  for (int g = 0; g < inst.item_count(); ++g) {
    if (inst.u_first[g] == 0) pool.push_back(g);
  }
  return ece_complete(inst, start, pool, {1, 2}, on_rotation);
}

// Per-item candidates plus the agent-0-empty fallback, in the given
// instance's own index space. Expects the canonical three-agent shape.
std::vector<CandidateOutcome> enumerate_candidates(const Instance& work,
                                                   const SolverHooks& hooks) {
  std::vector<CandidateOutcome> rows;
  const auto pref = build_preference_order(work);
  for (int g = 0; g < work.item_count(); ++g) {
    const auto cs = build_critical_set(work, pref, g);
    Allocation alloc;
    switch (cs.label) {
      case CriticalCase::dominant_item: {
        int anchor = -1;
        for (int member : cs.members) {
          if (anchor == -1 || work.u_first[member] > work.u_first[anchor]) anchor = member;
        }
        WellDefinedAllocation wd;
        wd.alloc = Allocation::empty(3);
        wd.alloc.bundles[0].insert(anchor);
        wd.reference_set = cs.members;
        alloc = complete_well_defined(work, wd);
        break;
      }
      case CriticalCase::heavy_last:
        alloc = solve_heavy_last(work, cs, hooks);
        break;
      case CriticalCase::light_last:
        alloc = solve_light_last(work, cs, hooks);
        break;
    }
    rows.push_back({g, cs.label, social_welfare(work, alloc), std::move(alloc)});
  }
  if (auto fallback = type2_only_allocation(work, hooks.on_rotation)) {
    rows.push_back({-1, std::nullopt, social_welfare(work, *fallback), std::move(*fallback)});
  }
  return rows;
}

}  // namespace

ThreeUnnormResult solve_three_unnormalized(const Instance& inst, const SolverHooks& hooks) {
  validate_instance(inst);
  if (inst.n != 3) throw ValidationError("n: three-agent solver requires n = 3");

  const auto reduction = strip_zero_items(inst);
  const auto canon = canonicalize_three(reduction.inst);
  const Instance& work = canon.inst;

  ThreeUnnormResult result;
  result.welfare = 0;
  if (work.item_count() == 0) {
    result.alloc = restore_items(Allocation::empty(3), reduction);
    return result;
  }

  auto to_original = [&](const Allocation& alloc) {
    return restore_items(decanonicalize_three(alloc, canon.swapped), reduction);
  };

  result.candidates = enumerate_candidates(work, hooks);
  for (auto& row : result.candidates) {
    if (row.item >= 0) row.item = reduction.kept[row.item];
    row.alloc = to_original(row.alloc);
  }

  // Items the shared second function values at zero blind the critical-set
  // thresholds, so the per-item bounds above them can miss half the optimum.
  // Such items cost nothing to park with agent 0 (nobody's envy sees them);
  // doing that and re-enumerating the remainder restores the guarantee, and
  // the extra row is kept only when it actually wins.
  std::vector<int> worthless, priced;
  for (int g = 0; g < work.item_count(); ++g) {
    (work.u_second[g] == 0 ? worthless : priced).push_back(g);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < result.candidates.size(); ++i) {
    if (result.candidates[i].welfare > result.candidates[best].welfare) best = i;
  }

  if (!worthless.empty()) {
    Instance sub = work;
    sub.u_first.clear();
    sub.u_second.clear();
    for (int g : priced) {
      sub.u_first.push_back(work.u_first[g]);
      sub.u_second.push_back(work.u_second[g]);
    }
    Allocation parked = Allocation::empty(3);
    Rational parked_value = 0;
    for (int g : worthless) {
      parked.bundles[0].insert(g);
      parked_value += work.u_first[g];
    }
    if (!priced.empty()) {
      const auto sub_rows = enumerate_candidates(sub, hooks);
      std::size_t best_sub = 0;
      for (std::size_t i = 1; i < sub_rows.size(); ++i) {
        if (sub_rows[i].welfare > sub_rows[best_sub].welfare) best_sub = i;
      }
      for (int i = 0; i < 3; ++i) {
        for (int g : sub_rows[best_sub].alloc.bundles[i]) parked.bundles[i].insert(priced[g]);
      }
      parked_value += sub_rows[best_sub].welfare;
    }
    if (parked_value > result.candidates[best].welfare) {
      result.candidates.push_back({-1, std::nullopt, parked_value, to_original(parked)});
      best = result.candidates.size() - 1;
    }
  }

  result.alloc = result.candidates[best].alloc;
  result.welfare = result.candidates[best].welfare;
  return result;
}

}  // namespace fairdiv
