#pragma once

#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

enum class Ordering { less, equal, greater };

// Compares u_first(g)/u_second(g) against u_first(h)/u_second(h) by
// cross-multiplication, so a zero second-type value acts as infinity without
// ever dividing. Requires that no item is worth 0 to both types.
Ordering compare_preference(const Instance& inst, int g, int h);

// Items sorted by falling first-to-second preference ratio; ties keep the
// original index order. The first x_count positions are exactly the items the
// first type values at least as much as the second type does.
struct PreferenceOrder {
  std::vector<int> order;     // item indices
  std::vector<int> position;  // inverse permutation
  int x_count = 0;
};

PreferenceOrder build_preference_order(const Instance& inst);

}  // namespace fairdiv
