#pragma once

#include <initializer_list>
#include <set>
#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/rational.hpp"

namespace testutil {

using fairdiv::Allocation;
using fairdiv::Instance;
using fairdiv::Rational;

inline Instance make_instance(int n, int type_split, bool normalized,
                              std::vector<Rational> u_first, std::vector<Rational> u_second) {
  Instance inst;
  inst.n = n;
  inst.type_split = type_split;
  inst.normalized = normalized;
  inst.u_first = std::move(u_first);
  inst.u_second = std::move(u_second);
  return inst;
}

// Three agents, singleton first type, unnormalized.
inline Instance three_agents(std::vector<Rational> u_first, std::vector<Rational> u_second) {
  return make_instance(3, 1, false, std::move(u_first), std::move(u_second));
}

inline Allocation make_alloc(std::initializer_list<std::set<int>> bundles) {
  Allocation a;
  for (const auto& b : bundles) a.bundles.push_back(b);
  return a;
}

inline Rational frac(long long num, long long den) { return Rational(num, den); }

}  // namespace testutil
