#pragma once

#include <optional>
#include <string>

#include "fairdiv/allocation.hpp"
#include "fairdiv/hooks.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/oracle.hpp"

namespace fairdiv {

// Instance file:
//   {"m": int, "n": int, "normalized": bool, "type_split": int,
//    "u_first": [rational-string x m], "u_second": [rational-string x m]}
// Rationals use the grammar `0 | [1-9][0-9]* ( "/" [1-9][0-9]* )?`.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Allocation file: {"bundles": [[int, ...] x n]}; bundles must be disjoint.
Allocation parse_allocation(const std::string& text);
std::string serialize_allocation(const Allocation& alloc);

// Solver verdict. The fairness and completeness bits are always recomputed
// from the allocation; nothing solver-claimed is echoed.
struct SolveReport {
  std::string algorithm;
  Rational welfare;
  std::optional<Rational> oracle_opt;
  std::optional<bool> ratio_bound_satisfied;
  bool ef1 = false;
  bool complete = false;
  Allocation allocation;

  bool operator==(const SolveReport&) const = default;
};

std::string serialize_solve_report(const SolveReport& report);
SolveReport parse_solve_report(const std::string& text);

std::string serialize_oracle_report(const OracleReport& report);
OracleReport parse_oracle_report(const std::string& text);

// Resolves "auto": three agents route to their dedicated solver by the
// normalized flag, anything else normalized routes to the any-n solver, and
// the rest has no algorithm with a guarantee. Valid names: auto, approx1,
// three-unnorm, three-norm.
std::string choose_algorithm(const Instance& inst, const std::string& requested);

// Runs the named algorithm and assembles the recomputed report. When
// `with_oracle` is set the exhaustive optimum and the algorithm's ratio bound
// (2x, or 5/3 for three-norm) are checked against it.
SolveReport run_solve(const Instance& inst, const std::string& algorithm, bool with_oracle,
                      const SolverHooks& hooks = {});

}  // namespace fairdiv
