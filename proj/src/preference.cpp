#include "fairdiv/preference.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

Ordering compare_preference(const Instance& inst, int g, int h) {
  // u1(g)/u2(g) vs u1(h)/u2(h) without division: with non-negative values and
  // no all-zero item, u2 == 0 makes the cross product dominate, which is the
  // infinite-ratio case.
  const Rational lhs = inst.u_first[g] * inst.u_second[h];
  const Rational rhs = inst.u_first[h] * inst.u_second[g];
  if (lhs < rhs) return Ordering::less;
  if (lhs > rhs) return Ordering::greater;
  return Ordering::equal;
}

PreferenceOrder build_preference_order(const Instance& inst) {
  PreferenceOrder out;
  const int m = inst.item_count();
  out.order.resize(m);
  std::iota(out.order.begin(), out.order.end(), 0);
  std::stable_sort(out.order.begin(), out.order.end(), [&](int g, int h) {
    return compare_preference(inst, g, h) == Ordering::greater;
  });
  out.position.resize(m);
  for (int p = 0; p < m; ++p) out.position[out.order[p]] = p;
  for (int g = 0; g < m; ++g) {
    if (inst.u_first[g] >= inst.u_second[g]) ++out.x_count;
  }
  return out;
}

}  // namespace fairdiv
