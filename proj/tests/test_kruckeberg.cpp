#include <doctest.h>

#include "pds/kruckeberg.hpp"

using namespace pds;

TEST_CASE("union_lemma_check accepts compatible sets") {
  auto rep = union_lemma_check(IntegerSet{0, 1}, IntegerSet{30});
  CHECK(rep.holds);
  CHECK(rep.witnesses.empty());
}

TEST_CASE("union_lemma_check catches a sum-shift hit") {
  // 1 + 1 - 0 = 2 lands in the second set
  auto rep = union_lemma_check(IntegerSet{0, 1}, IntegerSet{2});
  REQUIRE_FALSE(rep.holds);
  bool found = false;
  for (const auto& w : rep.witnesses) {
    if (w.kind == "sum-shift-hit" && w.value == 2) found = true;
  }
  CHECK(found);
}

TEST_CASE("union_lemma_check rejects bad inputs") {
  CHECK_THROWS_AS(union_lemma_check(IntegerSet{0, 1}, IntegerSet{0, 1}),
                  std::invalid_argument);  // not disjoint
  CHECK_THROWS_AS(union_lemma_check(IntegerSet{1, 2, 3}, IntegerSet{50}),
                  std::invalid_argument);  // not Sidon
}

TEST_CASE("union_lemma_check catches difference and sum overlaps") {
  // both sets contain the difference 1
  auto rep = union_lemma_check(IntegerSet{0, 1}, IntegerSet{100, 101});
  REQUIRE_FALSE(rep.holds);
  bool diff_overlap = false;
  for (const auto& w : rep.witnesses) {
    if (w.kind == "difference-overlap" && w.value == 1) diff_overlap = true;
  }
  CHECK(diff_overlap);

  // sums intersect: 3 + 4 = 7 = 0 + 7 -- and differences stay distinct
  auto rep2 = union_lemma_check(IntegerSet{3, 4}, IntegerSet{0, 7});
  REQUIRE_FALSE(rep2.holds);
  bool sum_overlap = false;
  for (const auto& w : rep2.witnesses) {
    if (w.kind == "sum-overlap") sum_overlap = true;
  }
  CHECK(sum_overlap);
}

TEST_CASE("build_kruckeberg two steps") {
  auto trace = build_kruckeberg(2);
  CHECK(trace.final_set == IntegerSet{0, 1, 30, 41, 100, 102});
  CHECK_FALSE(trace.truncated);
  CHECK(trace.completed_k == 2);
  REQUIRE(trace.steps.size() == 1);
  const auto& step = trace.steps[0];
  CHECK(step.k == 2);
  CHECK(step.l == 1);
  CHECK(step.p == 5);
  CHECK(step.block == IntegerSet{30, 41});  // pruned {3,14} shifted by 25 + 2
  REQUIRE(step.pair_added.has_value());
  CHECK(step.pair_added->first == 100);
  CHECK(step.pair_added->second == 102);

  REQUIRE(trace.density.size() == 1);
  CHECK(trace.density[0].x == 46);
  CHECK(trace.density[0].count == 3);  // 1, 30, 41

  CHECK_THROWS_AS(build_kruckeberg(1), std::invalid_argument);
}

TEST_CASE("build_kruckeberg audit mode agrees") {
  KruckebergOptions options;
  options.audit = true;
  auto trace = build_kruckeberg(2, options);
  CHECK(trace.final_set == IntegerSet{0, 1, 30, 41, 100, 102});
}

TEST_CASE("element budget truncates the recursion") {
  KruckebergOptions options;
  options.max_element = 1000;  // step 3 would reach past 6.9e9
  auto trace = build_kruckeberg(3, options);
  CHECK(trace.truncated);
  CHECK(trace.completed_k == 2);
  CHECK(trace.final_set == IntegerSet{0, 1, 30, 41, 100, 102});
}

TEST_CASE("pair branch is skipped when the difference already exists") {
  KruckebergOptions options;
  options.start = IntegerSet{0, 1, 3};  // Sidon, already contains difference 2
  auto trace = build_kruckeberg(2, options);
  REQUIRE(trace.steps.size() == 1);
  CHECK_FALSE(trace.steps[0].pair_added.has_value());
  CHECK(trace.steps[0].l == 3);
  CHECK(trace.steps[0].p == 37);  // least prime above 4*9
  CHECK(coverage(trace.final_set, 2).holds);
  CHECK(is_sidon(trace.final_set).holds);
}

TEST_CASE("density_ratio at step two") {
  auto trace = build_kruckeberg(2);
  auto ratio = density_ratio(trace, 2);
  CHECK(ratio.x == 46);
  CHECK(ratio.count == 3);
  CHECK(ratio.p == 5);
  CHECK(ratio.ceil_two_sqrt_p == 5);  // ceil(2 sqrt 5) = ceil(4.47)
  CHECK(ratio.squared_bound_holds);   // rhs is zero at p = 5
  CHECK(ratio.decimal == "0.442325");  // 3/sqrt(46), truncated

  CHECK_THROWS_AS(density_ratio(trace, 5), std::invalid_argument);
}
