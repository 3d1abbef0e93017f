#pragma once

// Block recursion packing shifted pruned Sidon sets:
//   A_1 = {0,1};  l_k = max(A_{k-1});  p_k = least prime > 4*l_k^2;
//   A_k = A_{k-1} u (B_{p_k} + p_k^2 + 2 l_k), plus the pair
//         {4 p_k^2, 4 p_k^2 + k} when the difference k is still missing.
// Each adjunction is justified by the union lemma: two Sidon sets whose
// difference sets meet only in 0, whose sumsets are disjoint, and whose
// sum-shifted sets avoid each other, union to a Sidon set.

#include "pds/core.hpp"
#include "pds/finite_sidon.hpp"

#include <optional>

namespace pds {

/// Checks the union-lemma hypotheses for disjoint Sidon sets C1, C2:
///   (C1-C1) n (C2-C2) = {0},
///   (C1+C1) n (C2+C2) = empty,
///   (Ci+Ci-Ci) n Cj   = empty for both orderings.
/// When all hold, the conclusion is additionally verified: the union must
/// pass the Sidon check (InvariantViolation if not -- cannot happen).
/// Throws std::invalid_argument when inputs overlap or are not Sidon.
VerificationReport union_lemma_check(const IntegerSet& C1, const IntegerSet& C2);

struct KruckebergStep {
  long k;
  mpz_class l;  // max of the previous set
  mpz_class p;  // least prime > 4*l^2
  IntegerSet block;
  std::optional<std::pair<mpz_class, mpz_class>> pair_added;
};

struct DensitySample {
  long k;
  mpz_class x;      // 2 p^2 - p + l
  mpz_class count;  // positive elements <= x
};

struct KruckebergTrace {
  std::vector<KruckebergStep> steps;
  IntegerSet final_set;
  std::vector<DensitySample> density;
  long completed_k = 1;
  bool truncated = false;  // stopped early by the max-element budget
};

struct KruckebergOptions {
  bool audit = false;                 // run union_lemma_check per adjunction
  mpz_class max_element = mpz_class("10000000000");  // stop before exceeding
  IntegerSet start{0, 1};             // seed A_1; must be Sidon
};

/// Runs steps k = 2..K (K >= 2). Every produced A_k is verified Sidon and
/// covering [1,k]; violations raise InvariantViolation. Steps whose pair
/// element 4 p_k^2 would exceed the budget are not built; the trace is then
/// marked truncated with completed_k the last finished step.
KruckebergTrace build_kruckeberg(long K, const KruckebergOptions& options = {});

/// Exact density sample at step k of the trace.
struct DensityRatio {
  long k;
  mpz_class x;
  mpz_class count;
  mpz_class p;
  mpz_class ceil_two_sqrt_p;
  bool squared_bound_holds;  // 2*count^2*p^2 >= (p - ceil(2 sqrt p))^2 * x
  std::string decimal;       // count/sqrt(x), 6 digits, truncated
};
DensityRatio density_ratio(const KruckebergTrace& trace, long k);

}  // namespace pds
