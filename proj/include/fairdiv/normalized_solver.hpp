#pragma once

#include "fairdiv/allocation.hpp"
#include "fairdiv/hooks.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

// Two-pointer solver for any number of agents with normalized utilities.
// Walks the preference order from both ends: the poorest first-type agent
// takes the front item unless the poorest second-type agent envies it, in
// which case that agent takes the back item. The result is complete, EF1 and
// within a factor 2 of the best EF1 welfare.
//
// Rejects unnormalized instances: without normalization no ratio holds.
Allocation solve_normalized(const Instance& inst, const SolverHooks& hooks = {});

}  // namespace fairdiv
