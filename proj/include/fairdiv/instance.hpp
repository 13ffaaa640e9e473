#pragma once

#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

// A two-type problem: agents [0, type_split) value items through u_first,
// agents [type_split, n) through u_second. All values are non-negative exact
// rationals; when `normalized` is set each row sums to exactly 1.
struct Instance {
  int n = 0;
  int type_split = 0;
  bool normalized = false;
  std::vector<Rational> u_first;
  std::vector<Rational> u_second;

  int item_count() const { return static_cast<int>(u_first.size()); }
  bool first_type(int agent) const { return agent < type_split; }
  const std::vector<Rational>& row(int agent) const {
    return first_type(agent) ? u_first : u_second;
  }
  const Rational& value(int agent, int item) const {
    return row(agent)[static_cast<std::size_t>(item)];
  }

  bool operator==(const Instance&) const = default;
};

// Throws ValidationError naming the offending field.
void validate_instance(const Instance& inst);

// Items worth 0 to both types are set aside before solving and handed to
// agent 0 afterwards; doing so changes no utility and preserves EF1.
struct ReducedInstance {
  Instance inst;
  std::vector<int> kept;     // reduced index -> original index
  std::vector<int> dropped;  // original indices of the removed items
};

ReducedInstance strip_zero_items(const Instance& inst);

// Maps a reduced-space allocation back to original item indices and appends
// the dropped items to agent 0's bundle.
Allocation restore_items(const Allocation& reduced_alloc, const ReducedInstance& reduction);

// The three-agent solvers assume the singleton type comes first. When the
// input has two first-type agents instead, swap the utility rows and relabel
// so the lone second-type agent becomes agent 0.
struct CanonicalThree {
  Instance inst;         // type_split == 1
  bool swapped = false;  // input had type_split == 2
};

CanonicalThree canonicalize_three(const Instance& inst);
Allocation decanonicalize_three(const Allocation& alloc, bool swapped);

}  // namespace fairdiv
