#include "pds/finite_sidon.hpp"

#include "pds/primes.hpp"

namespace pds {

IntegerSet ruzsa_sidon(const mpz_class& p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("ruzsa_sidon: " + p.get_str() + " is not an odd prime");
  }
  const mpz_class g = primitive_root(p);

  // x_i solves x = i (mod p-1), x = g^i (mod p); since (p-1)^-1 = p-1 (mod p),
  // x_i = i + (p-1) * ((i - g^i) mod p), landing in [1, p^2-p].
  std::vector<mpz_class> elems;
  mpz_class h = 1;
  for (mpz_class i = 1; i < p; ++i) {
    h = (h * g) % p;
    mpz_class t = (i - h) % p;
    if (t < 0) t += p;
    elems.push_back(i + (p - 1) * t);
  }
  return IntegerSet::from_values(std::move(elems));
}

PrunedSidonSet prune_to_bp(const mpz_class& p) {
  PrunedSidonSet out;
  out.base_prime = p;
  out.raw = ruzsa_sidon(p);

  // An element is close to some smaller one iff it is close to its immediate
  // predecessor in the raw set, so one ascending sweep settles membership.
  const auto& r = out.raw.values();
  std::vector<mpz_class> kept;
  kept.push_back(r.front());
  for (std::size_t j = 1; j < r.size(); ++j) {
    mpz_class gap = r[j] - r[j - 1];
    if (gap * gap > p) kept.push_back(r[j]);
  }
  out.pruned = IntegerSet::from_sorted(std::move(kept));
  out.removed_count = mpz_class(long(out.raw.size() - out.pruned.size()));

  // postconditions: surviving gaps exceed sqrt(p); size beats p - 2 sqrt(p)
  const auto& b = out.pruned.values();
  for (std::size_t j = 1; j < b.size(); ++j) {
    mpz_class gap = b[j] - b[j - 1];
    if (gap * gap <= p) {
      throw InvariantViolation("prune_to_bp: surviving gap " + gap.get_str() +
                               " within sqrt(" + p.get_str() + ")");
    }
  }
  mpz_class deficit = p - long(out.pruned.size());
  if (deficit > 0 && deficit * deficit >= 4 * p) {
    throw InvariantViolation("prune_to_bp: pruned size " +
                             std::to_string(out.pruned.size()) +
                             " misses the p - 2 sqrt(p) bound for p = " + p.get_str());
  }
  return out;
}

}  // namespace pds
