#pragma once

// The sparse auxiliary sequence: block k holds the pair
//   u_{2k}   = 4^g(k) + e_k      (e_k = 1 iff k = 2 mod 3, else 0)
//   u_{2k+1} = u_{2k} + k
// so adjoining a block injects the difference k. No element is divisible
// by 3, later blocks dwarf earlier ones, and the gap between a block and
// anything before it exceeds half the block value.

#include "pds/growth.hpp"
#include "pds/integer_set.hpp"

#include <utility>

namespace pds {

/// e_k of the block definition.
int u_epsilon(long k);

/// The pair (u_{2k}, u_{2k+1}) for k >= 1.
std::pair<mpz_class, mpz_class> u_block(const GrowthFunction& g, long k);

/// Lazily evaluated view of the sequence for a fixed growth function.
class USequence {
 public:
  explicit USequence(GrowthFunction g) : g_(std::move(g)) {}

  const GrowthFunction& growth() const { return g_; }

  /// Validates g over [1,k] (strict increase) and returns block k.
  std::pair<mpz_class, mpz_class> block(long k) const;

  struct Element {
    mpz_class value;
    long block_k;     // k with value in block k
    long flat_index;  // i with value = u_i (2k or 2k+1)
  };

  /// All u_i <= bound, ascending. Finite: block minima grow as 4^g(k).
  std::vector<Element> elements_upto(const mpz_class& bound) const;

  /// Counting function: number of u_i in [1, x].
  mpz_class counting(const mpz_class& x) const;

 private:
  GrowthFunction g_;
};

/// Exhaustively verifies, for blocks up to kmax:
///  (i)   no element is divisible by 3,
///  (ii)  u + u' > u'' + u''' for u in block k, u',u'',u''' in earlier
///        blocks (all quadruples expanded),
///  (iii) u - u' > u/2 for u in block k, u' in earlier blocks.
/// Throws std::invalid_argument if g is not strictly increasing on [1,kmax].
VerificationReport check_u_properties(const GrowthFunction& g, long kmax);

}  // namespace pds
