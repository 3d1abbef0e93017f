#pragma once

#include <gmpxx.h>

namespace pds {

/// Deterministic primality test. Strong-pseudoprime rounds with the fixed
/// witness set {2,3,5,7,...,37}, exact for all n < 3.317e24; trial division
/// for small n. Inputs beyond the deterministic bound fall back to many
/// GMP probable-prime rounds (never reached at the scales used here).
bool is_prime(const mpz_class& n);

/// Smallest prime strictly greater than n.
mpz_class next_prime(const mpz_class& n);

/// Smallest generator of the multiplicative group mod p, verified via
/// g^((p-1)/q) != 1 for every prime q | p-1.
/// Throws std::invalid_argument unless p is an odd prime.
mpz_class primitive_root(const mpz_class& p);

}  // namespace pds
