#include <doctest.h>

#include "pds/core.hpp"

#include <algorithm>
#include <random>

using namespace pds;

namespace {

// independent oracle: literal pair enumeration
mpz_class diff_count_brute(const IntegerSet& A, const IntegerSet& B, const mpz_class& u) {
  mpz_class count = 0;
  for (const auto& a : A) {
    for (const auto& b : B) {
      if (a - b == u) ++count;
    }
  }
  return count;
}

mpz_class sum_count_brute(const IntegerSet& A, const mpz_class& u) {
  mpz_class count = 0;
  for (const auto& a : A) {
    for (const auto& b : A) {
      if (a <= b && a + b == u) ++count;
    }
  }
  return count;
}

bool sidon_brute(const IntegerSet& A) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      for (std::size_t k = 0; k < A.size(); ++k) {
        for (std::size_t l = k + 1; l < A.size(); ++l) {
          if ((i != k || j != l) && A[j] - A[i] == A[l] - A[k]) return false;
        }
      }
    }
  }
  return true;
}

IntegerSet random_set(std::mt19937& rng, int n, long hi) {
  std::uniform_int_distribution<long> dist(0, hi);
  std::vector<mpz_class> v;
  while (int(v.size()) < n) {
    mpz_class x(dist(rng));
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  return IntegerSet::from_values(std::move(v));
}

}  // namespace

TEST_CASE("diff_count matches enumeration") {
  IntegerSet A{0, 1, 4, 6};
  CHECK(diff_count(A, A, 2) == 1);  // (6,4)
  CHECK(diff_count(A, A, 0) == 4);
  IntegerSet ap{1, 2, 3};
  CHECK(diff_count(ap, ap, 1) == 2);  // (2,1),(3,2)

  CHECK(diff_count(A, A, 2) == diff_count_brute(A, A, 2));
  CHECK_THROWS_AS(diff_count(IntegerSet{}, A, 1), std::invalid_argument);
  CHECK_THROWS_AS(diff_count(A, IntegerSet{}, 1), std::invalid_argument);
}

TEST_CASE("sum_count counts unordered pairs with repetition") {
  IntegerSet A{0, 1, 4, 6};
  CHECK(sum_count(A, 5) == 1);  // 1+4
  CHECK(sum_count(A, 2) == 1);  // 1+1
  CHECK(sum_count(A, 3) == 0);
  CHECK(sum_count(IntegerSet{3}, 6) == 1);  // 3+3
  for (long u = -2; u <= 14; ++u) {
    CHECK(sum_count(A, u) == sum_count_brute(A, u));
  }
  CHECK_THROWS_AS(sum_count(IntegerSet{}, 1), std::invalid_argument);
}

TEST_CASE("is_sidon examples and witness shape") {
  CHECK(is_sidon(IntegerSet{1, 2, 5, 11}).holds);
  CHECK(is_sidon(IntegerSet{3, 14, 16, 17}).holds);
  CHECK(is_sidon(IntegerSet{}).holds);
  CHECK(is_sidon(IntegerSet{7}).holds);

  auto rep = is_sidon(IntegerSet{1, 2, 3});
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.witnesses.size() == 1);
  const auto& w = rep.witnesses[0];
  REQUIRE(w.tuple.size() == 4);
  CHECK(w.tuple[0] == 2);
  CHECK(w.tuple[1] == 1);
  CHECK(w.tuple[2] == 3);
  CHECK(w.tuple[3] == 2);
  CHECK(w.value == 1);
}

TEST_CASE("is_sidon witnesses re-evaluate") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    IntegerSet A = random_set(rng, 12, 60);
    auto rep = is_sidon(A);
    CHECK(rep.holds == sidon_brute(A));
    CHECK(rep.holds == rep.witnesses.empty());
    if (!rep.holds) {
      const auto& w = rep.witnesses[0];
      CHECK(w.tuple[0] - w.tuple[1] == w.value);
      CHECK(w.tuple[2] - w.tuple[3] == w.value);
      for (const auto& t : w.tuple) CHECK(A.contains(t));
      CHECK((w.tuple[0] != w.tuple[2] || w.tuple[1] != w.tuple[3]));
    }
  }
}

TEST_CASE("is_sidon large-set path agrees with the hash path") {
  // above the small-set threshold, spread widely enough for several chunks
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(0, 5'000'000'000L);
  std::vector<mpz_class> v;
  for (int i = 0; i < 2500; ++i) v.emplace_back(dist(rng));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  IntegerSet big = IntegerSet::from_sorted(std::move(v));

  auto rep = is_sidon(big);
  if (!rep.holds) {
    const auto& w = rep.witnesses[0];
    CHECK(w.tuple[0] - w.tuple[1] == w.value);
    CHECK(w.tuple[2] - w.tuple[3] == w.value);
    for (const auto& t : w.tuple) CHECK(big.contains(t));
  }

  // arithmetic progression over the same range: collision guaranteed
  std::vector<mpz_class> prog;
  for (long i = 0; i < 2500; ++i) prog.emplace_back(i * 2'000'000L);
  auto rep2 = is_sidon(IntegerSet::from_sorted(std::move(prog)));
  CHECK_FALSE(rep2.holds);
}

TEST_CASE("is_sidon handles values beyond int64") {
  mpz_class huge = mpz_class(1) << 80;
  IntegerSet A = IntegerSet::from_values({0, 1, huge, huge + 3});
  CHECK(is_sidon(A).holds);
  IntegerSet B = IntegerSet::from_values({0, 1, huge, huge + 1});
  CHECK_FALSE(is_sidon(B).holds);
}

TEST_CASE("is_perfect_diff_prefix examples") {
  IntegerSet A{0, 1, 4, 6};
  CHECK(is_perfect_diff_prefix(A, 6).holds);
  auto rep = is_perfect_diff_prefix(A, 7);
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].kind == "missing-difference");
  CHECK(rep.witnesses[0].value == 7);
  CHECK(is_perfect_diff_prefix(IntegerSet{0, 1}, 1).holds);
  CHECK_THROWS_AS(is_perfect_diff_prefix(A, 0), std::invalid_argument);
}

TEST_CASE("coverage examples") {
  CHECK(coverage(IntegerSet{0, 1, 30, 100, 102}, 2).holds);
  CHECK(coverage(IntegerSet{0, 1, 4, 6}, 6).holds);
  auto rep = coverage(IntegerSet{0, 1}, 2);
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].value == 2);
}

TEST_CASE("counting_function") {
  IntegerSet A{0, 1, 30, 100, 102};
  CHECK(counting_function(A, 100) == 3);
  CHECK(counting_function(A, 0) == 0);
  CHECK(counting_function(IntegerSet{3, 14, 16, 17}, 20) == 4);
  CHECK(counting_function(A, 102) == 4);  // 0 itself never counted
}

TEST_CASE("t_value") {
  IntegerSet A{0, 1, 4, 6};
  CHECK(t_value(A, 2) == mpz_class(4));
  CHECK_FALSE(t_value(A, 7).has_value());
  try {
    t_value(IntegerSet{1, 2, 3}, 1);
    FAIL("expected NonUniqueDifference");
  } catch (const NonUniqueDifference& e) {
    REQUIRE(e.witnesses.size() == 2);
    CHECK(e.witnesses[0] == 1);
    CHECK(e.witnesses[1] == 2);
  }
}

TEST_CASE("dilate") {
  CHECK(dilate(IntegerSet{1, 2, 5}, 3) == IntegerSet{3, 6, 15});
  CHECK(dilate(IntegerSet{0, 1}, 2) == IntegerSet{0, 2});
  CHECK(dilate(IntegerSet{3, 14, 16, 17}, 3) == IntegerSet{9, 42, 48, 51});
  CHECK_THROWS_AS(dilate(IntegerSet{1}, 0), std::invalid_argument);
}

TEST_CASE("dilate preserves the Sidon property and scales differences") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    IntegerSet A = random_set(rng, 8, 100);
    for (long c : {2L, 3L, 7L}) {
      IntegerSet D = dilate(A, c);
      CHECK(is_sidon(D).holds == is_sidon(A).holds);
      for (long u = -5; u <= 5; ++u) {
        CHECK(diff_count(D, D, c * u) == diff_count(A, A, u));
      }
      CHECK(counting_function(D, 50) == counting_function(A, 50 / c));
    }
  }
}

TEST_CASE("difference counts are symmetric and d(0) = |A|") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    IntegerSet A = random_set(rng, 10, 200);
    CHECK(diff_count(A, A, 0) == long(A.size()));
    for (long u = 1; u <= 12; ++u) {
      CHECK(diff_count(A, A, u) == diff_count(A, A, -u));
    }
  }
}

TEST_CASE("sidon iff all nonzero counts at most 1") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    IntegerSet A = random_set(rng, 7, 40);
    bool all_small = true;
    mpz_class span = A.max() - A.min();
    for (mpz_class u = 1; u <= span; ++u) {
      if (diff_count(A, A, u) > 1) all_small = false;
    }
    CHECK(is_sidon(A).holds == all_small);
  }
}

TEST_CASE("union decomposition identity") {
  IntegerSet A1{0, 1}, A2{4, 6};
  CHECK(union_decomposition_check(A1, A2, 3).holds);
  CHECK(union_decomposition_check(A1, A2, 0).holds);
  CHECK_THROWS_AS(union_decomposition_check(IntegerSet{0, 1}, IntegerSet{1, 6}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(union_decomposition_check(IntegerSet{}, A2, 1), std::invalid_argument);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    IntegerSet whole = random_set(rng, 12, 150);
    std::vector<mpz_class> left, right;
    for (std::size_t i = 0; i < whole.size(); ++i) {
      (rng() % 2 ? left : right).push_back(whole[i]);
    }
    if (left.empty() || right.empty()) continue;
    IntegerSet L = IntegerSet::from_sorted(std::move(left));
    IntegerSet R = IntegerSet::from_sorted(std::move(right));
    std::uniform_int_distribution<long> ndist(-160, 160);
    for (int reps = 0; reps < 10; ++reps) {
      CHECK(union_decomposition_check(L, R, ndist(rng)).holds);
    }
  }
}

TEST_CASE("t_value present for all of [1,k] iff perfect prefix") {
  IntegerSet good{0, 1, 4, 6};
  for (long n = 1; n <= 6; ++n) CHECK(t_value(good, n).has_value());
  CHECK(is_perfect_diff_prefix(good, 6).holds);

  IntegerSet gap{0, 1, 30, 100, 102};  // 3 is not a difference
  CHECK_FALSE(is_perfect_diff_prefix(gap, 3).holds);
  CHECK_FALSE(t_value(gap, 3).has_value());
}

TEST_CASE("IntegerSet construction guards") {
  CHECK_THROWS_AS(IntegerSet::from_values({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(IntegerSet::from_sorted({2, 1}), std::invalid_argument);
  CHECK(IntegerSet::from_values({2, 1}) == IntegerSet{1, 2});
  CHECK(IntegerSet{1, 5}.unioned(IntegerSet{2, 5}) == IntegerSet{1, 2, 5});
  CHECK(IntegerSet{1, 5}.shifted(10) == IntegerSet{11, 15});
  CHECK_THROWS_AS(IntegerSet{}.min(), std::invalid_argument);
}
