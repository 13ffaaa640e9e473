#pragma once

#include <set>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/hooks.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

// Agents pick in the cyclic order given: each takes its most valuable
// remaining pool item (smallest index on ties) until the pool empties.
// The pool must be disjoint from everything already allocated.
Allocation round_robin(const Instance& inst, Allocation start, std::set<int> pool,
                       const std::vector<int>& agent_order);

// Envy-cycle elimination. While the envy digraph has a cycle, the bundles on
// one deterministically chosen cycle are rotated (each agent receives the
// bundle of the agent it envies); the next pool item then goes to the
// smallest-index unenvied agent. Given an EF1 start the result covers the
// pool and stays EF1.
//
// `participants` limits both rotation and item placement to a subset of
// agents (empty means all). With a subset, the EF1 guarantee covers pairs of
// participants; the caller owns the envy structure of frozen agents.
Allocation ece_complete(const Instance& inst, Allocation start, const std::vector<int>& pool,
                        std::vector<int> participants = {}, const RotationHook& on_rotation = {});

}  // namespace fairdiv
