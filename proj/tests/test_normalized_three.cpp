#include <doctest.h>

#include <random>

#include "fairdiv/errors.hpp"
#include "fairdiv/normalized_three.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/predicates.hpp"
#include "fairdiv/preference.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using namespace testutil;

namespace {

const Rational kEps(1, 1000);

Instance identical_thirds() {
  return make_instance(3, 1, true, {frac(1, 3), frac(1, 3), frac(1, 3)},
                       {frac(1, 3), frac(1, 3), frac(1, 3)});
}

}  // namespace

TEST_SUITE_BEGIN("three agents normalized");

TEST_CASE("small-items pass on identical utilities") {
  const Allocation out = solve_three_normalized_small(identical_thirds());
  CHECK(out == make_alloc({{0}, {1}, {2}}));
  CHECK(social_welfare(identical_thirds(), out) == Rational(1));
}

TEST_CASE("small-items pass on an empty instance") {
  // Normalization needs mass, so drive the pass directly with a bare shape.
  Instance inst = make_instance(3, 1, true, {}, {});
  inst.normalized = true;
  CHECK(solve_three_normalized_small(inst) == make_alloc({{}, {}, {}}));
}

TEST_CASE("pass preconditions") {
  const Instance tn = gen_tightness_norm(kEps);
  CHECK_THROWS_AS(solve_three_normalized_small(tn), ValidationError);   // has a big item
  CHECK_THROWS_AS(solve_three_normalized_big(identical_thirds()), ValidationError);
  CHECK_THROWS_AS(solve_three_normalized(three_agents({1, 1}, {1, 1})), ValidationError);
  CHECK_THROWS_AS(solve_three_normalized(make_instance(2, 1, true, {1}, {1})), ValidationError);
}

TEST_CASE("big-item pass reproduces the tightness trace") {
  const Instance tn = gen_tightness_norm(kEps);
  const Allocation out = solve_three_normalized(tn);
  CHECK(out == make_alloc({{2}, {0, 3}, {1, 4}}));
  // Exact welfare of the traced allocation; the informal account rounds it
  // down to 1.
  CHECK(social_welfare(tn, out) == Rational(1) + kEps);
}

TEST_CASE("big-item pass with a single item") {
  const Instance inst = make_instance(3, 1, true, {1}, {1});
  CHECK(solve_three_normalized(inst) == make_alloc({{0}, {}, {}}));
}

TEST_CASE("identical utilities reach the full welfare") {
  const Allocation out = solve_three_normalized(identical_thirds());
  CHECK(is_complete(out, 3));
  CHECK(social_welfare(identical_thirds(), out) == Rational(1));
}

TEST_CASE("small-items intermediates stay good and EF1") {
  std::mt19937_64 rng(79);
  int covered = 0;
  for (int round = 0; round < 200; ++round) {
    const Instance inst = gen_random(rng(), 3, 1 + static_cast<int>(rng() % 7), true, 6);
    const Instance work = canonicalize_three(inst).inst;
    const auto pref = build_preference_order(work);
    Rational biggest = 0;
    for (int p = 0; p < pref.x_count; ++p)
      biggest = std::max(biggest, work.u_first[pref.order[p]]);
    if (biggest > Rational(1, 3)) continue;
    ++covered;
    SolverHooks hooks;
    hooks.on_step = [&](const Instance& cb, const Allocation& a) {
      CHECK(is_good(cb, a));
      CHECK(is_ef1(cb, a));
    };
    const Allocation out = solve_three_normalized_small(work, hooks);
    CHECK(is_complete(out, work.item_count()));
    CHECK(is_ef1(work, out));
  }
  CHECK(covered > 10);
}

TEST_CASE("big-item loop intermediates stay good and EF1, rotations keep the advantage") {
  std::mt19937_64 rng(83);
  int covered = 0, rotations = 0;
  for (int round = 0; round < 300; ++round) {
    const Instance inst = gen_random(rng(), 3, 1 + static_cast<int>(rng() % 7), true, 6);
    const Instance work = canonicalize_three(inst).inst;
    const auto pref = build_preference_order(work);
    Rational biggest = 0;
    for (int p = 0; p < pref.x_count; ++p)
      biggest = std::max(biggest, work.u_first[pref.order[p]]);
    if (biggest <= Rational(1, 3)) continue;
    ++covered;
    SolverHooks hooks;
    hooks.on_step = [&](const Instance& cb, const Allocation& a) {
      CHECK(is_good(cb, a));
      CHECK(is_ef1(cb, a));
    };
    hooks.on_rotation = [&](const Instance& cb, const Allocation& before,
                            const Allocation& after, const std::vector<int>&) {
      ++rotations;
      CHECK(delta(cb, after.bundles[0]) >= delta(cb, before.bundles[0]));
    };
    const Allocation out = solve_three_normalized_big(work, hooks);
    CHECK(is_complete(out, work.item_count()));
    CHECK(is_ef1(work, out));
  }
  CHECK(covered > 10);
  (void)rotations;  // rotations may legitimately be rare here
}

TEST_CASE("dispatch covers every normalized three-agent instance") {
  std::mt19937_64 rng(89);
  for (int round = 0; round < 250; ++round) {
    const Instance inst = gen_random(rng(), 3, 1 + static_cast<int>(rng() % 7), true, 6);
    const Allocation out = solve_three_normalized(inst);
    CHECK(is_complete(out, inst.item_count()));
    CHECK(is_ef1(inst, out));
    const Rational sol = social_welfare(inst, out);
    CHECK(5 * sol >= 3 * brute_force_opt_ef1(inst).opt_ef1);
  }
}

TEST_CASE("front half fully captured implies a 2/3 welfare share") {
  std::mt19937_64 rng(97);
  int covered = 0;
  for (int round = 0; round < 200; ++round) {
    const Instance inst = gen_random(rng(), 3, 1 + static_cast<int>(rng() % 6), true, 6);
    const Instance work = canonicalize_three(inst).inst;
    const auto pref = build_preference_order(work);
    Rational biggest = 0;
    for (int p = 0; p < pref.x_count; ++p)
      biggest = std::max(biggest, work.u_first[pref.order[p]]);
    if (biggest > Rational(1, 3)) continue;
    const Allocation out = solve_three_normalized_small(work);
    bool front_in_0 = true;
    for (int p = 0; p < pref.x_count; ++p)
      front_in_0 = front_in_0 && out.bundles[0].count(pref.order[p]) > 0;
    if (!front_in_0) continue;
    ++covered;
    CHECK(3 * social_welfare(work, out) >= 2 * brute_force_opt_ef1(work).opt_ef1);
  }
  CHECK(covered > 5);
}

TEST_SUITE_END();
