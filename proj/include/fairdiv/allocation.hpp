#pragma once

#include <set>
#include <vector>

namespace fairdiv {

// One bundle of item indices per agent. Bundles must stay pairwise disjoint;
// an allocation is complete once the bundles cover every item.
struct Allocation {
  std::vector<std::set<int>> bundles;

  static Allocation empty(int agent_count) {
    Allocation a;
    a.bundles.resize(static_cast<std::size_t>(agent_count));
    return a;
  }

  int agent_count() const { return static_cast<int>(bundles.size()); }
  std::set<int> assigned_items() const;

  bool operator==(const Allocation&) const = default;
};

bool bundles_disjoint(const Allocation& alloc);
bool is_complete(const Allocation& alloc, int item_count);

}  // namespace fairdiv
