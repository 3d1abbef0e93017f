#pragma once

// Perfect-difference-set prefix built from a Sidon set:
//   1. dilate the source set by 3,
//   2. remove every element matching one of the four collision patterns
//      against the auxiliary sequence (conditions c1-c4),
//   3. adjoin auxiliary block k whenever the difference k is still missing.
// The removal patterns quantify over auxiliary values <= 2*horizon; values
// beyond that cannot produce an element inside [1, horizon] (each pattern
// forces u <= 2b), so the truncation is exhaustive.

#include "pds/core.hpp"
#include "pds/growth.hpp"
#include "pds/u_sequence.hpp"

#include <array>

namespace pds {

struct BuildStep {
  long k;
  bool took_block;
};

/// Record of a construction run. `removed` holds the full removed sets per
/// condition so that counting functions R_i(x) are available for any x.
struct ConstructionTrace {
  IntegerSet source_sidon;             // B
  GrowthFunction growth;
  mpz_class horizon;
  IntegerSet b0;
  std::array<IntegerSet, 4> removed;   // by condition c1..c4 (overlaps allowed)
  std::vector<BuildStep> steps;
  IntegerSet final_set;
  bool audited = false;
};

/// Builds b0 = (3*B) minus all elements matching c1-c4.
/// Preconditions: B nonempty Sidon with positive elements,
/// horizon >= 3*max(B). Throws std::invalid_argument otherwise.
/// Postconditions (checked): b0 Sidon, every element divisible by 3.
ConstructionTrace build_b0(const IntegerSet& B, const GrowthFunction& g,
                           const mpz_class& horizon);

/// Runs steps k = 1..K on trace.b0: adjoin block k exactly when the
/// difference k is absent. With audit on, re-derives at every adjoined
/// step r and every n in A_{r-1} - block_r that |n| > r, that n has no
/// representation in A_{r-1}, and none from block_r into A_{r-1}
/// (throws InvariantViolation on any miss).
/// Postcondition (checked): final_set is a perfect difference prefix on
/// [1, K].
ConstructionTrace build_a(ConstructionTrace trace, long K, bool audit = false);

/// Verifies the removal-count bounds at x <= horizon, with U the counting
/// function of the realized auxiliary sequence:
///   R1(x) <= U(2x)^2, R2(x) <= U(2x)^2, R3(x) <= U(2x)^3,
///   R4(x) <= 2U(2x)^2 + U(2x),
/// plus the aggregate A(x) >= B(x/3) - (U(2x)^3 + 4U(2x)^2 + U(2x)).
/// Throws std::invalid_argument when x > horizon or x < 1.
VerificationReport removal_bound_check(const ConstructionTrace& trace, const mpz_class& x);

}  // namespace pds
