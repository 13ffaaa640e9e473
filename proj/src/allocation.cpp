#include "fairdiv/allocation.hpp"

namespace fairdiv {

std::set<int> Allocation::assigned_items() const {
  std::set<int> all;
  for (const auto& bundle : bundles) all.insert(bundle.begin(), bundle.end());
  return all;
}

bool bundles_disjoint(const Allocation& alloc) {
  std::size_t total = 0;
  for (const auto& bundle : alloc.bundles) total += bundle.size();
  return total == alloc.assigned_items().size();
}

bool is_complete(const Allocation& alloc, int item_count) {
  auto assigned = alloc.assigned_items();
  if (static_cast<int>(assigned.size()) != item_count) return false;
  for (int g : assigned) {
    if (g < 0 || g >= item_count) return false;
  }
  return bundles_disjoint(alloc);
}

}  // namespace fairdiv
