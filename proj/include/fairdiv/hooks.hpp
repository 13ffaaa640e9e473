#pragma once

#include <functional>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

// Fired after a bundle rotation: the allocation before, after, and the agents
// on the rotated cycle in traversal order.
using RotationHook = std::function<void(const Instance&, const Allocation& before,
                                        const Allocation& after, const std::vector<int>& cycle)>;

// Optional instrumentation. on_step observes every intermediate allocation of
// the iterative solvers; on_rotation observes envy-cycle rotations. Solvers
// that reduce or relabel the instance report intermediates against the
// instance they actually iterate on, which is the first callback argument.
struct SolverHooks {
  std::function<void(const Instance&, const Allocation&)> on_step;
  RotationHook on_rotation;

  void step(const Instance& inst, const Allocation& alloc) const {
    if (on_step) on_step(inst, alloc);
  }
};

}  // namespace fairdiv
