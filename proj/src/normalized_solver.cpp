#include "fairdiv/normalized_solver.hpp"

#include "fairdiv/errors.hpp"
#include "fairdiv/predicates.hpp"
#include "fairdiv/preference.hpp"

namespace fairdiv {

namespace {

int poorest_agent(const Instance& inst, const Allocation& alloc, int begin, int end) {
  int best = begin;
  Rational best_value = utility(inst, begin, alloc.bundles[begin]);
  for (int i = begin + 1; i < end; ++i) {
    Rational value = utility(inst, i, alloc.bundles[i]);
    if (value < best_value) {
      best = i;
      best_value = value;
    }
  }
  return best;
}

}  // namespace

Allocation solve_normalized(const Instance& inst, const SolverHooks& hooks) {
  validate_instance(inst);
  if (!inst.normalized) throw ValidationError("normalized: solver requires normalized utilities");

  const auto reduction = strip_zero_items(inst);
  const Instance& work = reduction.inst;
  const auto pref = build_preference_order(work);

  Allocation alloc = Allocation::empty(work.n);
  int front = 1, back = work.item_count();  // 1-based positions into the order
  while (front <= back) {
    const int s = poorest_agent(work, alloc, 0, work.type_split);
    const int t = poorest_agent(work, alloc, work.type_split, work.n);
    if (!envies(work, alloc, t, s)) {
      alloc.bundles[s].insert(pref.order[front - 1]);
      ++front;
    } else {
      alloc.bundles[t].insert(pref.order[back - 1]);
      --back;
    }
    hooks.step(work, alloc);
  }
  return restore_items(alloc, reduction);
}

}  // namespace fairdiv
