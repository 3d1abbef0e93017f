#pragma once

// Deterministic pair-greedy builder: start from {0,1}; for each n whose
// difference is still missing, adjoin the pair {m, m+n} with the smallest
// m >= 0 that keeps the set Sidon.

#include "pds/core.hpp"

#include <map>

namespace pds {

struct GreedyTrace {
  long upto = 0;
  IntegerSet final_set;
  std::map<long, mpz_class> t_values;  // n -> the unique x with x, x+n in the set
  std::map<long, std::pair<mpz_class, mpz_class>> pair_origin;  // n -> adjoined pair
};

/// Builds the greedy perfect difference prefix covering [1, N].
/// Postcondition (checked): final_set passes is_perfect_diff_prefix(., N).
GreedyTrace build_greedy(long N);

struct TGrowthRow {
  long n;
  mpz_class t;        // t_n
  mpz_class n_cubed;  // denominator of the exact ratio t_n / n^3
};

/// One row per covered n, plus max ratio via max_ratio_row (exact compare).
std::vector<TGrowthRow> t_growth_report(const GreedyTrace& trace);
TGrowthRow max_ratio_row(const std::vector<TGrowthRow>& rows);

}  // namespace pds
