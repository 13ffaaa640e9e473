#pragma once

#include <set>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

// Sum of the agent's type utility over a bundle; empty bundle is worth 0.
Rational utility(const Instance& inst, int agent, const std::set<int>& bundle);

// i envies k when i values k's bundle strictly above its own; strong envy
// survives the removal of any single item from k's bundle. An empty bundle is
// never envied.
bool envies(const Instance& inst, const Allocation& alloc, int i, int k);
bool strongly_envies(const Instance& inst, const Allocation& alloc, int i, int k);
bool is_envied(const Instance& inst, const Allocation& alloc, int agent);

// No ordered pair of agents exhibits strong envy.
bool is_ef1(const Instance& inst, const Allocation& alloc);

// Outside their intersection, every item of a ranks at least as high as every
// item of b in the preference order; vacuously true when either side empties.
bool precedes(const Instance& inst, const std::set<int>& a, const std::set<int>& b);

// Every first-type bundle precedes every second-type bundle.
bool is_good(const Instance& inst, const Allocation& alloc);

// First-type advantage of a bundle: u_first - u_second. May be negative.
Rational delta(const Instance& inst, const std::set<int>& bundle);

// Sum over all agents of the value each assigns to its own bundle.
Rational social_welfare(const Instance& inst, const Allocation& alloc);

}  // namespace fairdiv
