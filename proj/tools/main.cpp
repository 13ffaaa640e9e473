#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fairdiv/errors.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/predicates.hpp"
#include "fairdiv/unnormalized_three.hpp"

namespace {

using namespace fairdiv;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBoundViolation = 2;
constexpr int kExitSizeGuard = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("input: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("output: cannot open '" + path + "'");
  out << text;
}

int cmd_solve(const std::string& input, const std::string& algo, const std::string& output,
              bool with_oracle) {
  const Instance inst = parse_instance(read_file(input));
  const std::string resolved = choose_algorithm(inst, algo);
  const SolveReport report = run_solve(inst, resolved, with_oracle);
  std::cout << serialize_solve_report(report);
  if (!output.empty()) write_output(output, serialize_allocation(report.allocation));
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& allocation_path) {
  const Instance inst = parse_instance(read_file(input));
  const Allocation alloc = parse_allocation(read_file(allocation_path));
  if (alloc.agent_count() != inst.n)
    throw ValidationError("bundles: expected one bundle per agent");
  for (const auto& bundle : alloc.bundles) {
    for (int g : bundle) {
      if (g >= inst.item_count())
        throw ValidationError("bundles: item index " + std::to_string(g) + " out of range");
    }
  }

  nlohmann::json doc;
  doc["complete"] = is_complete(alloc, inst.item_count());
  doc["ef1"] = is_ef1(inst, alloc);
  doc["welfare"] = format_rational(social_welfare(inst, alloc));
  if (!doc["ef1"].get<bool>()) {
    for (int i = 0; i < inst.n && !doc.contains("violating_pair"); ++i) {
      for (int k = 0; k < inst.n; ++k) {
        if (i == k || !strongly_envies(inst, alloc, i, k)) continue;
        doc["violating_pair"] = {i, k};
        int witness = -1;
        for (int g : alloc.bundles[k]) {
          if (witness == -1 || inst.value(i, g) > inst.value(i, witness)) witness = g;
        }
        doc["witness_item"] = witness;
        break;
      }
    }
  }
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& input) {
  const Instance inst = parse_instance(read_file(input));
  std::cout << serialize_oracle_report(brute_force_opt_ef1(inst));
  return kExitOk;
}

int cmd_gen(const std::string& kind, const std::string& epsilon, std::uint64_t seed, int n, int m,
            bool normalized, const std::string& output) {
  Instance inst;
  if (kind == "tightness-unnorm" || kind == "tightness-norm") {
    const auto eps = parse_rational(epsilon);
    if (!eps) throw ValidationError("epsilon: malformed rational");
    inst = kind == "tightness-unnorm" ? gen_tightness_unnorm(*eps) : gen_tightness_norm(*eps);
  } else if (kind == "random") {
    inst = gen_random(seed, n, m, normalized);
  } else {
    throw ValidationError("kind: expected tightness-unnorm, tightness-norm or random");
  }
  write_output(output, serialize_instance(inst));
  return kExitOk;
}

struct BenchRow {
  std::string suite, kind;
  std::string detail;
  Rational sol, opt;
  bool bound_ok = true;
};

void print_row(const BenchRow& row) {
  const Rational ratio = row.sol == 0 ? Rational(0) : row.opt / row.sol;
  std::cout << row.suite << ',' << row.kind << ',' << row.detail << ','
            << format_rational(row.sol) << ',' << format_rational(row.opt) << ','
            << format_rational(ratio) << ',' << (row.bound_ok ? "yes" : "no") << "\n";
}

int cmd_bench(const std::string& suite, std::uint64_t seed, int count) {
  std::cout << "suite,kind,instance,sol,opt,ratio,bound_ok\n";
  bool violated = false;

  if (suite == "paper") {
    Rational eps(1, 1);
    for (int i = 0; i < count; ++i) {
      eps /= 10;
      for (const std::string kind : {"tightness-unnorm", "tightness-norm"}) {
        const bool unnorm = kind == "tightness-unnorm";
        const Instance inst = unnorm ? gen_tightness_unnorm(eps) : gen_tightness_norm(eps);
        const auto report = run_solve(inst, unnorm ? "three-unnorm" : "three-norm", true);
        BenchRow row{suite, kind, "eps=" + format_rational(eps), report.welfare,
                     *report.oracle_opt, *report.ratio_bound_satisfied};
        violated = violated || !row.bound_ok;
        print_row(row);
      }
    }
  } else if (suite == "random") {
    Rational worst_ratio(0);
    std::string worst_detail = "none";
    for (int i = 0; i < count; ++i) {
      const int shape = i % 5;
      const int agents[] = {3, 3, 2, 4, 5};
      const bool normalized = shape != 0;  // shape 0 exercises the unnormalized solver
      const Instance inst =
          gen_random(seed + static_cast<std::uint64_t>(i), agents[shape], 1 + i % 8, normalized);
      const std::string algo = choose_algorithm(inst, "auto");
      const auto report = run_solve(inst, algo, true);
      BenchRow row{suite, algo, "seed=" + std::to_string(seed + i), report.welfare,
                   *report.oracle_opt, *report.ratio_bound_satisfied};
      violated = violated || !row.bound_ok;
      print_row(row);
      if (row.sol > 0 && row.opt / row.sol > worst_ratio) {
        worst_ratio = row.opt / row.sol;
        worst_detail = algo + " " + row.detail;
      }
    }
    std::cout << "# worst ratio " << format_rational(worst_ratio) << " (" << worst_detail << ")\n";
  } else {
    throw ValidationError("suite: expected paper or random");
  }
  return violated ? kExitBoundViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EF1-constrained welfare approximation toolkit for two agent types"};
  app.require_subcommand(1);

  std::string input, allocation_path, output, algo = "auto", kind, epsilon = "1/1000", suite;
  std::uint64_t seed = 1;
  int n = 3, m = 5, count = 3;
  bool normalized = false, with_oracle = false;

  auto* solve = app.add_subcommand("solve", "Run an approximation algorithm on an instance");
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--algo", algo, "auto | approx1 | three-unnorm | three-norm");
  solve->add_option("--output", output, "Write the allocation to this file");
  solve->add_flag("--oracle", with_oracle, "Also run the exhaustive oracle and check the bound");

  auto* verify = app.add_subcommand("verify", "Check an allocation against an instance");
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--allocation", allocation_path, "Allocation file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimal-EF1 search");
  oracle->add_option("--input", input, "Instance file")->required();

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--kind", kind, "tightness-unnorm | tightness-norm | random")->required();
  gen->add_option("--epsilon", epsilon, "Epsilon for the tightness families");
  gen->add_option("--seed", seed, "Seed for random instances");
  gen->add_option("--n", n, "Agent count for random instances");
  gen->add_option("--m", m, "Item count for random instances");
  gen->add_flag("--normalized", normalized, "Rescale random rows to sum to 1");
  gen->add_option("--output", output, "Write the instance to this file");

  auto* bench = app.add_subcommand("bench", "Ratio benchmark suites (CSV on stdout)");
  bench->add_option("--suite", suite, "paper | random")->required();
  bench->add_option("--seed", seed, "Base seed for the random suite");
  bench->add_option("--count", count, "Epsilon steps (paper) or instances (random)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(input, algo, output, with_oracle);
    if (verify->parsed()) return cmd_verify(input, allocation_path);
    if (oracle->parsed()) return cmd_oracle(input);
    if (gen->parsed()) return cmd_gen(kind, epsilon, seed, n, m, normalized, output);
    if (bench->parsed()) return cmd_bench(suite, seed, count);
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
