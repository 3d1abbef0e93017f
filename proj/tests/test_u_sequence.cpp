#include <doctest.h>

#include "pds/u_sequence.hpp"

using namespace pds;

TEST_CASE("growth function parsing") {
  CHECK(GrowthFunction::parse("linear")(5) == 5);
  CHECK(GrowthFunction::parse("affine:3")(5) == 8);
  CHECK(GrowthFunction::parse("scaled:2")(5) == 10);
  CHECK_THROWS_AS(GrowthFunction::parse("cubic"), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::parse("affine:x"), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::scaled(0), std::invalid_argument);
}

TEST_CASE("u_block values for the linear growth function") {
  auto g = GrowthFunction::linear();
  CHECK(u_block(g, 1) == std::pair<mpz_class, mpz_class>{4, 5});
  CHECK(u_block(g, 2) == std::pair<mpz_class, mpz_class>{17, 19});
  CHECK(u_block(g, 3) == std::pair<mpz_class, mpz_class>{64, 67});
  CHECK(u_epsilon(2) == 1);
  CHECK(u_epsilon(5) == 1);
  CHECK(u_epsilon(3) == 0);
  CHECK_THROWS_AS(u_block(g, 0), std::invalid_argument);
}

TEST_CASE("u_block big values are exact") {
  auto g = GrowthFunction::affine(3);
  auto [lo, hi] = u_block(g, 30);  // 4^33 + e_30
  mpz_class four33 = 1;
  for (int i = 0; i < 33; ++i) four33 *= 4;  // independent of mpz_pow
  CHECK(lo == four33);                        // 30 = 0 mod 3, so e = 0
  CHECK(hi == four33 + 30);
  CHECK(lo > (mpz_class(1) << 63));  // genuinely beyond int64
}

TEST_CASE("pair gap equals the block index") {
  auto g = GrowthFunction::scaled(2);
  for (long k = 1; k <= 20; ++k) {
    auto [lo, hi] = u_block(g, k);
    CHECK(hi - lo == k);
  }
}

TEST_CASE("no element is divisible by 3") {
  for (const auto& g : {GrowthFunction::linear(), GrowthFunction::affine(7)}) {
    for (long k = 1; k <= 50; ++k) {
      auto [lo, hi] = u_block(g, k);
      CHECK(lo % 3 != 0);
      CHECK(hi % 3 != 0);
    }
  }
}

TEST_CASE("check_u_properties") {
  CHECK(check_u_properties(GrowthFunction::linear(), 10).holds);
  CHECK(check_u_properties(GrowthFunction::linear(), 2).holds);  // 17-5=12 > 17/2
  CHECK(check_u_properties(GrowthFunction::affine(3), 12).holds);

  GrowthFunction constant{"constant", [](long) { return 4; }};
  CHECK_THROWS_AS(check_u_properties(constant, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_u_properties(GrowthFunction::linear(), 1), std::invalid_argument);
}

TEST_CASE("elements_upto and counting") {
  USequence seq(GrowthFunction::linear());
  auto elems = seq.elements_upto(66);
  REQUIRE(elems.size() == 5);  // 4, 5, 17, 19, 64
  CHECK(elems[0].value == 4);
  CHECK(elems[0].flat_index == 2);
  CHECK(elems[1].value == 5);
  CHECK(elems[1].flat_index == 3);
  CHECK(elems[2].value == 17);
  CHECK(elems[2].block_k == 2);
  CHECK(elems[4].value == 64);
  CHECK(elems[4].block_k == 3);
  CHECK(elems[4].flat_index == 6);

  CHECK(seq.counting(66) == 5);
  CHECK(seq.counting(3) == 0);
  CHECK(seq.counting(0) == 0);
  CHECK(seq.counting(4) == 1);
}
