#include "fairdiv/normalized_three.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairdiv/errors.hpp"
#include "fairdiv/predicates.hpp"
#include "fairdiv/preference.hpp"
#include "fairdiv/subroutines.hpp"

namespace fairdiv {

namespace {

// Poorer of the two second-type agents; ties go to agent 2.
int poorer_follower(const Instance& inst, const Allocation& alloc) {
  return utility(inst, 1, alloc.bundles[1]) < utility(inst, 2, alloc.bundles[2]) ? 1 : 2;
}

Rational best_front_value(const Instance& inst, const PreferenceOrder& pref) {
  Rational best = 0;
  for (int p = 0; p < pref.x_count; ++p) best = std::max(best, inst.u_first[pref.order[p]]);
  return best;
}

void require_canonical_three(const Instance& inst) {
  if (inst.n != 3 || inst.type_split != 1)
    throw ValidationError("normalized three-agent pass: expects n = 3 with type_split 1");
  if (!inst.normalized)
    throw ValidationError("normalized: three-agent normalized pass requires normalized utilities");
}

}  // namespace

Allocation solve_three_normalized_small(const Instance& inst, const SolverHooks& hooks) {
  require_canonical_three(inst);
  const auto pref = build_preference_order(inst);
  if (best_front_value(inst, pref) > Rational(1, 3))
    throw ValidationError("small-items pass: a preferred-half item exceeds 1/3");

  Allocation alloc = Allocation::empty(3);
  int front = 1, back = inst.item_count();
  while (front <= back) {
    const int t = poorer_follower(inst, alloc);
    if (front <= pref.x_count) {
      if (!envies(inst, alloc, t, 0)) {
        alloc.bundles[0].insert(pref.order[front - 1]);
        ++front;
      } else {
        alloc.bundles[t].insert(pref.order[back - 1]);
        --back;
      }
    } else {
      if (!envies(inst, alloc, 0, t)) {
        alloc.bundles[t].insert(pref.order[back - 1]);
        --back;
      } else {
        alloc.bundles[0].insert(pref.order[front - 1]);
        ++front;
      }
    }
    hooks.step(inst, alloc);
  }
  return alloc;
}

Allocation solve_three_normalized_big(const Instance& inst, const SolverHooks& hooks) {
  require_canonical_three(inst);
  const auto pref = build_preference_order(inst);

  int star = -1;
  for (int p = 0; p < pref.x_count; ++p) {
    const int g = pref.order[p];
    if (star == -1 || inst.u_first[g] > inst.u_first[star] ||
        (inst.u_first[g] == inst.u_first[star] && g < star)) {
      star = g;
    }
  }
  if (star == -1 || inst.u_first[star] <= Rational(1, 3))
    throw ValidationError("big-item pass: no preferred-half item exceeds 1/3");

  Allocation alloc = Allocation::empty(3);
  alloc.bundles[0].insert(star);

  const int m = inst.item_count();
  int front = 1, back = m;
  auto skip_star = [&] {
    if (front <= m && pref.order[front - 1] == star) ++front;
  };
  skip_star();
  while (front <= back && back > pref.x_count) {
    const int t = poorer_follower(inst, alloc);
    if (front <= pref.x_count) {
      if (!envies(inst, alloc, t, 0)) {
        alloc.bundles[0].insert(pref.order[front - 1]);
        ++front;
        skip_star();
      } else {
        alloc.bundles[t].insert(pref.order[back - 1]);
        --back;
      }
    } else {
      if (!envies(inst, alloc, 0, t)) {
        alloc.bundles[t].insert(pref.order[back - 1]);
        --back;
      } else {
        alloc.bundles[0].insert(pref.order[front - 1]);
        ++front;
        skip_star();
      }
    }
    hooks.step(inst, alloc);
  }

  if (back == pref.x_count) {
    std::vector<int> pool;
    for (int p = front; p <= back; ++p) {
      if (pref.order[p - 1] != star) pool.push_back(pref.order[p - 1]);
    }
    std::sort(pool.begin(), pool.end());
    RotationHook guard = [&hooks](const Instance& cb_inst, const Allocation& before,
                                  const Allocation& after, const std::vector<int>& cycle) {
      if (delta(cb_inst, after.bundles[0]) < delta(cb_inst, before.bundles[0]))
        throw std::logic_error("big-item pass: rotation lowered agent 0's advantage");
      if (hooks.on_rotation) hooks.on_rotation(cb_inst, before, after, cycle);
    };
    alloc = ece_complete(inst, alloc, pool, {}, guard);
  }
  return alloc;
}

Allocation solve_three_normalized(const Instance& inst, const SolverHooks& hooks) {
  validate_instance(inst);
  if (inst.n != 3) throw ValidationError("n: three-agent solver requires n = 3");
  if (!inst.normalized)
    throw ValidationError("normalized: three-agent normalized solver requires normalized utilities");

  const auto reduction = strip_zero_items(inst);
  const auto canon = canonicalize_three(reduction.inst);
  const Instance& work = canon.inst;

  const auto pref = build_preference_order(work);
  const Allocation alloc = best_front_value(work, pref) <= Rational(1, 3)
                               ? solve_three_normalized_small(work, hooks)
                               : solve_three_normalized_big(work, hooks);
  return restore_items(decanonicalize_three(alloc, canon.swapped), reduction);
}

}  // namespace fairdiv
