#include <doctest.h>

#include "fairdiv/errors.hpp"
#include "fairdiv/instance.hpp"
#include "helpers.hpp"

using namespace fairdiv;
using namespace testutil;

TEST_SUITE_BEGIN("instance");

TEST_CASE("validation catches structural problems") {
  CHECK_THROWS_AS(validate_instance(make_instance(1, 0, false, {}, {})), ValidationError);
  CHECK_THROWS_AS(validate_instance(make_instance(3, 0, false, {1}, {1})), ValidationError);
  CHECK_THROWS_AS(validate_instance(make_instance(3, 3, false, {1}, {1})), ValidationError);
  CHECK_THROWS_AS(validate_instance(make_instance(3, 1, false, {1, 2}, {1})), ValidationError);
  CHECK_THROWS_AS(validate_instance(make_instance(3, 1, true, {1}, {frac(1, 2)})),
                  ValidationError);
  CHECK_NOTHROW(validate_instance(make_instance(3, 1, true, {1}, {1})));
  CHECK_NOTHROW(validate_instance(three_agents({0, 1}, {1, 0})));
}

TEST_CASE("zero items are stripped and returned to agent 0") {
  const Instance inst = three_agents({1, 0, 2, 0}, {1, 0, 0, 0});
  const auto reduction = strip_zero_items(inst);
  CHECK(reduction.inst.item_count() == 2);
  CHECK(reduction.kept == std::vector<int>{0, 2});
  CHECK(reduction.dropped == std::vector<int>{1, 3});
  CHECK(reduction.inst.u_first == std::vector<Rational>{1, 2});

  Allocation reduced = make_alloc({{1}, {0}, {}});
  const Allocation restored = restore_items(reduced, reduction);
  CHECK(restored == make_alloc({{1, 2, 3}, {0}, {}}));
}

TEST_CASE("canonicalization brings the singleton type to the front") {
  const Instance inst = make_instance(3, 2, false, {1, 2}, {3, 4});
  const auto canon = canonicalize_three(inst);
  CHECK(canon.swapped);
  CHECK(canon.inst.type_split == 1);
  CHECK(canon.inst.u_first == std::vector<Rational>{3, 4});
  CHECK(canon.inst.u_second == std::vector<Rational>{1, 2});

  const Allocation canonical = make_alloc({{0}, {1}, {}});
  CHECK(decanonicalize_three(canonical, true) == make_alloc({{1}, {}, {0}}));

  const auto identity = canonicalize_three(three_agents({1}, {2}));
  CHECK(!identity.swapped);
  CHECK(decanonicalize_three(canonical, false) == canonical);
}

TEST_SUITE_END();
