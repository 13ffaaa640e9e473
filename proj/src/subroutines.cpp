#include "fairdiv/subroutines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fairdiv/errors.hpp"
#include "fairdiv/predicates.hpp"

namespace fairdiv {

Allocation round_robin(const Instance& inst, Allocation start, std::set<int> pool,
                       const std::vector<int>& agent_order) {
  if (agent_order.empty() && !pool.empty())
    throw ValidationError("round_robin: empty agent order with a non-empty pool");
  std::size_t turn = 0;
  while (!pool.empty()) {
    const int agent = agent_order[turn % agent_order.size()];
    ++turn;
    const auto& row = inst.row(agent);
    int best = -1;
    for (int g : pool) {
      if (best == -1 || row[g] > row[best]) best = g;  // ties keep the smaller index
    }
    start.bundles[agent].insert(best);
    pool.erase(best);
  }
  return start;
}

namespace {

struct CycleSearch {
  const Instance& inst;
  const Allocation& alloc;
  const std::vector<int>& agents;
  std::vector<int> color;  // indexed by agent id: 0 white, 1 gray, 2 black
  std::vector<int> path;
  std::vector<int> cycle;

  bool visit(int u) {
    color[u] = 1;
    path.push_back(u);
    for (int v : agents) {
      if (v == u || !envies(inst, alloc, u, v)) continue;
      if (color[v] == 1) {
        auto it = std::find(path.begin(), path.end(), v);
        cycle.assign(it, path.end());
        return true;
      }
      if (color[v] == 0 && visit(v)) return true;
    }
    color[u] = 2;
    path.pop_back();
    return false;
  }
};

// First cycle closed by a DFS that scans roots and out-arcs in ascending
// agent order; empty when the envy digraph is acyclic.
std::vector<int> find_envy_cycle(const Instance& inst, const Allocation& alloc,
                                 const std::vector<int>& agents) {
  CycleSearch search{inst, alloc, agents, std::vector<int>(alloc.agent_count(), 0), {}, {}};
  for (int root : agents) {
    if (search.color[root] == 0 && search.visit(root)) return search.cycle;
  }
  return {};
}

}  // namespace

Allocation ece_complete(const Instance& inst, Allocation start, const std::vector<int>& pool,
                        std::vector<int> participants, const RotationHook& on_rotation) {
  if (participants.empty()) {
    participants.resize(start.bundles.size());
    std::iota(participants.begin(), participants.end(), 0);
  }
  std::sort(participants.begin(), participants.end());

  auto eliminate_cycles = [&](Allocation& alloc) {
    // Every rotation hands each cycle agent a bundle it strictly prefers, so
    // total utility rises and the loop terminates.
    while (true) {
      const auto cycle = find_envy_cycle(inst, alloc, participants);
      if (cycle.empty()) break;
      Allocation before = alloc;
      for (std::size_t p = 0; p < cycle.size(); ++p) {
        alloc.bundles[cycle[p]] = before.bundles[cycle[(p + 1) % cycle.size()]];
      }
      if (on_rotation) on_rotation(inst, before, alloc, cycle);
    }
  };

  std::size_t next = 0;
  while (true) {
    eliminate_cycles(start);
    if (next == pool.size()) break;
    const int item = pool[next++];
    int target = -1;
    for (int i : participants) {
      bool envied = false;
      for (int k : participants) {
        if (k != i && envies(inst, start, k, i)) {
          envied = true;
          break;
        }
      }
      if (!envied) {
        target = i;
        break;
      }
    }
    if (target == -1) throw std::logic_error("ece_complete: acyclic digraph without a source");
    start.bundles[target].insert(item);
  }
  return start;
}

}  // namespace fairdiv
