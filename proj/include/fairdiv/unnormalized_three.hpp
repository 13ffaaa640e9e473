#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/hooks.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/preference.hpp"

namespace fairdiv {

// How a critical set splits the work:
//  - dominant_item: one member holds at least half of the set's first-type
//    value, so seeding that item and round-robin-completing already suffices;
//  - heavy_last: no member dominates and the set's last member (in the
//    reordered sequence) is worth more to the second type than everything
//    outside the set;
//  - light_last: no member dominates and the last member is not.
enum class CriticalCase { dominant_item, heavy_last, light_last };

// A set of items built around `target_item`: the other members form a prefix
// of the preference order, they all sit in the first type's preferred half,
// and their second-type value reaches the threshold that caps the optimum.
// `sequence` is the full item order used by the downstream passes: the
// target item is pulled forward to position |members|-1 when it would
// otherwise trail the set.
struct CriticalSet {
  int target_item = -1;
  std::set<int> members;
  int size = 0;               // |members|
  std::vector<int> sequence;  // all items; members occupy the first |members| slots
  CriticalCase label = CriticalCase::dominant_item;
};

CriticalCase classify_critical_case(const Instance& inst, const std::set<int>& members,
                                    const std::vector<int>& sequence);

// Builds the critical set for one item from prefix sums of the preference
// order. Expects a three-agent instance with type_split == 1 and no item
// worth 0 to both types.
CriticalSet build_critical_set(const Instance& inst, const PreferenceOrder& pref, int item);

// An EF1 allocation whose first bundle carries at least half the reference
// set's first-type value and at most its second-type value, together with an
// agent permutation free of forward envy.
struct WellDefinedAllocation {
  Allocation alloc;
  std::array<int, 3> permutation{0, 1, 2};  // {0,1,2} or {2,0,1}
  std::set<int> reference_set;
};

// Throws ValidationError when any invariant fails.
void validate_well_defined(const Instance& inst, const WellDefinedAllocation& wd);

// Round-robin completion of a well-defined allocation in reverse permutation
// order. Output is complete, EF1, and captures at least half of
// u_first(reference_set) plus half of u_second(everything else).
Allocation complete_well_defined(const Instance& inst, const WellDefinedAllocation& wd);

// Heavy-last stage one: seed the first member with agent 0 and the last with
// agent 2, then feed agent 0 from the front of the set and agent 1 from the
// back of the whole sequence until one side is exhausted. Positions are
// 1-based into cs.sequence; exactly one of front == |K| or back == |K| holds
// on return.
struct TwoPointerFill {
  Allocation alloc;
  int front = 0;
  int back = 0;
};

TwoPointerFill heavy_last_fill(const Instance& inst, const CriticalSet& cs,
                               const SolverHooks& hooks = {});

// Hands sequence positions [front, back] to whichever of agents 0/1 is
// currently unenvied; once both are envied, agent 0 absorbs the rest.
Allocation assign_leftover_middle(const Instance& inst, Allocation alloc,
                                  const std::vector<int>& sequence, int front, int back,
                                  const SolverHooks& hooks = {});

// When agent 0 envies agent 1's bundle, swaps the two bundles if that raises
// welfare; ties keep the original.
Allocation swap_first_pair_if_better(const Instance& inst, Allocation alloc);

// Full heavy-last pipeline; complete and EF1.
Allocation solve_heavy_last(const Instance& inst, const CriticalSet& cs,
                            const SolverHooks& hooks = {});

// Light-last stage one: agents 0 and 1 split the set from its two ends while
// agent 2 consumes the tail of the sequence, each step going to an unenvied
// agent. Positions are 1-based; terminates with front > back or tail == |K|.
struct ThreePointerFill {
  Allocation alloc;
  int front = 0;
  int back = 0;
  int tail = 0;
};

ThreePointerFill light_last_fill(const Instance& inst, const CriticalSet& cs,
                                 const SolverHooks& hooks = {});

// Rearranges the bundles of a light-last fill that consumed the whole set
// (bundles 0 and 1 partition `reference_set`) into a well-defined allocation.
WellDefinedAllocation shuffle_to_well_defined(const Instance& inst, const Allocation& alloc,
                                              const std::set<int>& reference_set);

// Full light-last pipeline; complete and EF1.
Allocation solve_light_last(const Instance& inst, const CriticalSet& cs,
                            const SolverHooks& hooks = {});

// One row of the enumeration report. `item == -1` marks a synthetic
// candidate: either the fallback that leaves agent 0 empty-handed (present
// whenever the first utility row has at most two positive entries) or the
// winner-only row that parks every second-type-worthless item with agent 0.
struct CandidateOutcome {
  int item = -1;
  std::optional<CriticalCase> label;
  Rational welfare;
  Allocation alloc;
};

struct ThreeUnnormResult {
  Allocation alloc;
  Rational welfare;
  std::vector<CandidateOutcome> candidates;
};

// Three agents, arbitrary (unnormalized) utilities. Enumerates a candidate
// allocation per item via its critical set, adds the agent-0-empty fallback
// when applicable, and returns the welfare maximum, which is within a factor
// 2 of the best EF1 welfare. Item indices and agent labels in the result are
// the caller's.
ThreeUnnormResult solve_three_unnormalized(const Instance& inst, const SolverHooks& hooks = {});

}  // namespace fairdiv
