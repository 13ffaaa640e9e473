#pragma once

#include <cstdint>

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

// Ground truth for desk-scale instances.
struct OracleReport {
  Rational opt_ef1;          // best welfare over complete EF1 allocations
  Allocation best_alloc;     // a witness achieving it
  Rational unconstrained_max;  // welfare ceiling ignoring fairness
  long long ef1_count = 0;   // number of complete EF1 allocations

  bool operator==(const OracleReport&) const = default;
};

// Enumerates all n^m complete allocations. Refuses instances with more than
// 10^7 assignments (SizeGuardError).
OracleReport brute_force_opt_ef1(const Instance& inst);

// Five-item three-agent family with utilities (eps,1,1,0,0) against
// (0,eps,2eps,eps,eps). Requires 0 < eps and the strict preference chain, so
// effectively eps < 1/2.
Instance gen_tightness_unnorm(const Rational& eps);

// Normalized five-item family (1/3, 1/3-eps, 1/3+eps, 0, 0) against
// (eps, eps, 1/3, 1/3-eps, 1/3-eps). Requires 0 < eps < 1/6 and the strict
// preference chain.
Instance gen_tightness_norm(const Rational& eps);

// Deterministic pseudo-random instance: utilities num/den with both parts
// bounded, no item worth 0 to both types, rows rescaled to sum exactly 1 when
// `normalized` is set. The same arguments always produce the same instance.
Instance gen_random(std::uint64_t seed, int n, int m, bool normalized, int value_bound = 10);

}  // namespace fairdiv
