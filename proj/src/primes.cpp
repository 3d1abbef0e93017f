#include "pds/primes.hpp"

#include <stdexcept>

namespace pds {
namespace {

// Strong-pseudoprime witnesses covering all n < 3.317e24
// (Sorenson-Webster bound for the first twelve primes).
constexpr unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const mpz_class& deterministic_bound() {
  static const mpz_class bound("3317044064679887385961981");
  return bound;
}

bool strong_probable_prime(const mpz_class& n, unsigned long base) {
  // n odd, n > base assumed by caller
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  mpz_class b(base), x;
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  // trial division over a few small primes; settles everything < 41*41
  for (unsigned long p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 41 * 41) return true;
  if (n >= deterministic_bound()) {
    // out of the deterministic range; not reached at this library's scales
    return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
  }
  for (unsigned long a : kWitnesses) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

mpz_class next_prime(const mpz_class& n) {
  if (n < 2) return 2;
  mpz_class c = n + 1;
  if (mpz_even_p(c.get_mpz_t()) && c > 2) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

mpz_class primitive_root(const mpz_class& p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("primitive_root: " + p.get_str() + " is not an odd prime");
  }
  // factor p-1 by trial division (desk-scale inputs)
  std::vector<mpz_class> prime_factors;
  mpz_class m = p - 1;
  for (mpz_class d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);

  for (mpz_class g = 2; g < p; ++g) {
    bool generates = true;
    for (const auto& q : prime_factors) {
      mpz_class e = (p - 1) / q, x;
      mpz_powm(x.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
      if (x == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw std::logic_error("primitive_root: no generator found (unreachable for prime p)");
}

}  // namespace pds
