#pragma once

#include "fairdiv/allocation.hpp"
#include "fairdiv/hooks.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

// Three agents, normalized utilities, no single first-half item worth more
// than 1/3 to the first type. Two-pointer walk with a priority flip: while
// front items remain in the first type's preferred half, agent 0 leads;
// afterwards the poorer of agents 1/2 leads. Expects type_split == 1 and no
// item worth 0 to both types.
Allocation solve_three_normalized_small(const Instance& inst, const SolverHooks& hooks = {});

// Companion for the case where some preferred-half item exceeds 1/3 to the
// first type: that item is seeded to agent 0, the same walk runs until the
// back pointer reaches the preferred half, and envy-cycle elimination places
// whatever remains. Agent 0's first-type advantage never drops during the
// rotations.
Allocation solve_three_normalized_big(const Instance& inst, const SolverHooks& hooks = {});

// Dispatches between the two passes; the result is complete, EF1, and within
// a factor 5/3 of the best EF1 welfare. Accepts type_split 1 or 2.
Allocation solve_three_normalized(const Instance& inst, const SolverHooks& hooks = {});

}  // namespace fairdiv
