#pragma once

// Finite Sidon sets from primes: the modular construction R_p and the
// gap-pruned subset B_p whose nonzero differences all exceed sqrt(p).

#include "pds/integer_set.hpp"

namespace pds {

/// Sidon set of size p-1 inside [1, p^2-p], built by combining the residues
/// i mod (p-1) and g^i mod p through the Chinese remainder theorem, with g
/// the smallest primitive root mod p.
/// Throws std::invalid_argument unless p is an odd prime.
IntegerSet ruzsa_sidon(const mpz_class& p);

struct PrunedSidonSet {
  mpz_class base_prime;
  IntegerSet raw;     // R_p
  IntegerSet pruned;  // B_p
  mpz_class removed_count;
};

/// Drops, from each pair of elements at distance <= sqrt(p) (integer test
/// d*d <= p), the larger one. At most floor(sqrt(p)) elements are removed:
/// the raw set is Sidon, so each small gap value occurs at most once.
/// Postconditions (checked): every surviving nonzero difference d has
/// d*d > p, and (p - |pruned|)^2 < 4p.
PrunedSidonSet prune_to_bp(const mpz_class& p);

}  // namespace pds
