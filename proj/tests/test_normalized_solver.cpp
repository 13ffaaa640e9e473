#include <doctest.h>

#include <random>

#include "fairdiv/errors.hpp"
#include "fairdiv/normalized_solver.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/predicates.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using namespace testutil;

TEST_SUITE_BEGIN("normalized solver");

TEST_CASE("a single item goes to the first open agent") {
  for (int n = 2; n <= 5; ++n) {
    const Instance inst = make_instance(n, 1, true, {1}, {1});
    Allocation expected = Allocation::empty(n);
    expected.bundles[0].insert(0);
    CHECK(solve_normalized(inst) == expected);
  }
}

TEST_CASE("identical utilities split one item each") {
  const Instance inst = make_instance(3, 1, true, {frac(1, 3), frac(1, 3), frac(1, 3)},
                                      {frac(1, 3), frac(1, 3), frac(1, 3)});
  CHECK(solve_normalized(inst) == make_alloc({{0}, {2}, {1}}));
}

TEST_CASE("rejects unnormalized input") {
  CHECK_THROWS_AS(solve_normalized(three_agents({1, 2}, {1, 1})), ValidationError);
}

TEST_CASE("every intermediate allocation is good and EF1") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Instance inst = gen_random(rng(), n, 1 + static_cast<int>(rng() % 7), true, 6);
    int steps = 0;
    SolverHooks hooks;
    hooks.on_step = [&](const Instance& cb, const Allocation& a) {
      ++steps;
      CHECK(is_good(cb, a));
      CHECK(is_ef1(cb, a));
    };
    const Allocation out = solve_normalized(inst, hooks);
    CHECK(steps == inst.item_count());
    CHECK(is_complete(out, inst.item_count()));
    CHECK(is_ef1(inst, out));
  }
}

TEST_CASE("welfare stays within a factor 2 of the exhaustive optimum") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Instance inst = gen_random(rng(), n, 1 + static_cast<int>(rng() % 6), true, 6);
    const Allocation out = solve_normalized(inst);
    const Rational sol = social_welfare(inst, out);
    CHECK(2 * sol >= brute_force_opt_ef1(inst).opt_ef1);
    CHECK(sol >= 1);  // both branches of the guarantee bottom out at 1
  }
}

TEST_CASE("normalized tightness family is handled") {
  const Instance tn = gen_tightness_norm(Rational(1, 100));
  const Allocation out = solve_normalized(tn);
  CHECK(is_complete(out, 5));
  CHECK(is_ef1(tn, out));
  CHECK(2 * social_welfare(tn, out) >= brute_force_opt_ef1(tn).opt_ef1);
}

TEST_SUITE_END();
