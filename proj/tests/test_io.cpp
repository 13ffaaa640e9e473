#include <doctest.h>

#include <random>

#include "fairdiv/errors.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/predicates.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using namespace testutil;

TEST_SUITE_BEGIN("io");

TEST_CASE("instance files round-trip byte-identically") {
  std::mt19937_64 rng(103);
  for (int round = 0; round < 200; ++round) {
    const int m = static_cast<int>(rng() % 9);
    const Instance inst =
        gen_random(rng(), 2 + static_cast<int>(rng() % 4), m, m > 0 && round % 2 == 0, 8);
    const std::string text = serialize_instance(inst);
    const Instance parsed = parse_instance(text);
    CHECK(parsed == inst);
    CHECK(serialize_instance(parsed) == text);
  }
}

TEST_CASE("instance parsing reports the offending field") {
  const Instance tu = gen_tightness_unnorm(Rational(1, 100));
  CHECK(parse_instance(serialize_instance(tu)).item_count() == 5);

  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_instance(text);
      FAIL_CHECK("expected a validation error for: " << text);
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("not json", "JSON");
  expect_error(R"({"m":1,"n":3,"normalized":false,"type_split":1,"u_first":["-1/2"],"u_second":["1"]})",
               "u_first[0]");
  expect_error(R"({"m":1,"n":3,"normalized":true,"type_split":1,"u_first":["1/2"],"u_second":["1"]})",
               "sum to 1");
  expect_error(R"({"m":2,"n":3,"normalized":false,"type_split":1,"u_first":["1"],"u_second":["1","1"]})",
               "u_first");
  expect_error(R"({"m":1,"n":3,"normalized":false,"type_split":3,"u_first":["1"],"u_second":["1"]})",
               "type_split");
  expect_error(R"({"m":1,"n":3,"normalized":false,"type_split":1,"u_first":["1/0"],"u_second":["1"]})",
               "u_first[0]");
}

TEST_CASE("mutated documents either parse or reject, never crash") {
  const std::string base = serialize_instance(gen_tightness_unnorm(Rational(1, 100)));
  std::mt19937_64 rng(113);
  for (int round = 0; round < 500; ++round) {
    std::string text = base;
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = rng() % text.size();
      switch (rng() % 3) {
        case 0: text[pos] = static_cast<char>('!' + rng() % 90); break;
        case 1: text.erase(pos, 1); break;
        default: text.insert(pos, 1, static_cast<char>('0' + rng() % 10)); break;
      }
    }
    try {
      const Instance inst = parse_instance(text);
      CHECK_NOTHROW(validate_instance(inst));
    } catch (const ValidationError&) {
      // fine: named rejection is the contract
    }
  }
}

TEST_CASE("allocation files round-trip byte-identically") {
  std::mt19937_64 rng(107);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 9);
    Allocation a = Allocation::empty(n);
    for (int g = 0; g < m; ++g) {
      const int slot = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
      if (slot < n) a.bundles[slot].insert(g);
    }
    const std::string text = serialize_allocation(a);
    const Allocation parsed = parse_allocation(text);
    CHECK(parsed == a);
    CHECK(serialize_allocation(parsed) == text);
  }
}

TEST_CASE("allocation parsing rejects overlaps") {
  CHECK_THROWS_AS(parse_allocation(R"({"bundles": [[0, 1], [1]]})"), ValidationError);
  CHECK_THROWS_AS(parse_allocation(R"({"bundles": [[0, 0]]})"), ValidationError);
  CHECK_THROWS_AS(parse_allocation(R"({"bundles": [[-1]]})"), ValidationError);
  CHECK_THROWS_AS(parse_allocation(R"({"bundles": 3})"), ValidationError);
}

TEST_CASE("solve and oracle reports round-trip") {
  const Instance tu = gen_tightness_unnorm(Rational(1, 1000));
  const SolveReport report = run_solve(tu, "three-unnorm", true);
  const std::string text = serialize_solve_report(report);
  const SolveReport parsed = parse_solve_report(text);
  CHECK(parsed == report);
  CHECK(serialize_solve_report(parsed) == text);

  const SolveReport bare = run_solve(tu, "three-unnorm", false);
  CHECK(!bare.oracle_opt.has_value());
  const SolveReport bare_parsed = parse_solve_report(serialize_solve_report(bare));
  CHECK(bare_parsed == bare);

  const auto oracle = brute_force_opt_ef1(tu);
  const std::string oracle_text = serialize_oracle_report(oracle);
  CHECK(parse_oracle_report(oracle_text) == oracle);
  CHECK(serialize_oracle_report(parse_oracle_report(oracle_text)) == oracle_text);
}

TEST_CASE("algorithm choice") {
  const Instance tu = gen_tightness_unnorm(Rational(1, 100));
  const Instance tn = gen_tightness_norm(Rational(1, 100));
  CHECK(choose_algorithm(tu, "auto") == "three-unnorm");
  CHECK(choose_algorithm(tn, "auto") == "three-norm");
  CHECK(choose_algorithm(gen_random(5, 4, 4, true, 5), "auto") == "approx1");
  CHECK(choose_algorithm(gen_random(5, 2, 4, true, 5), "auto") == "approx1");
  CHECK(choose_algorithm(tn, "approx1") == "approx1");
  CHECK_THROWS_AS(choose_algorithm(gen_random(5, 4, 4, false, 5), "auto"), ValidationError);
  CHECK_THROWS_AS(choose_algorithm(tu, "simplex"), ValidationError);
}

TEST_CASE("solve reports recompute their verdicts") {
  const Instance tn = gen_tightness_norm(Rational(1, 1000));
  const SolveReport report = run_solve(tn, "three-norm", true);
  CHECK(report.ef1 == is_ef1(tn, report.allocation));
  CHECK(report.complete);
  CHECK(report.welfare == social_welfare(tn, report.allocation));
  CHECK(report.oracle_opt == Rational(5, 3) - Rational(2, 1000));
  CHECK(report.ratio_bound_satisfied.value());

  const SolveReport fallback = run_solve(tn, "approx1", true);
  CHECK(fallback.algorithm == "approx1");
  CHECK(fallback.ratio_bound_satisfied.value());
}

TEST_SUITE_END();
