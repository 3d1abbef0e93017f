#include "pds/u_sequence.hpp"

namespace pds {

GrowthFunction GrowthFunction::linear() {
  return {"linear", [](long k) { return k; }};
}

GrowthFunction GrowthFunction::affine(long c) {
  return {"affine:" + std::to_string(c), [c](long k) { return k + c; }};
}

GrowthFunction GrowthFunction::scaled(long c) {
  if (c < 1) throw std::invalid_argument("GrowthFunction::scaled: factor must be >= 1");
  return {"scaled:" + std::to_string(c), [c](long k) { return c * k; }};
}

GrowthFunction GrowthFunction::parse(const std::string& text) {
  if (text == "linear") return linear();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    long c = 0;
    try {
      c = std::stol(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("growth function: bad parameter in '" + text + "'");
    }
    if (head == "affine") return affine(c);
    if (head == "scaled") return scaled(c);
  }
  throw std::invalid_argument("growth function: expected linear|affine:c|scaled:c, got '" +
                              text + "'");
}

int u_epsilon(long k) { return k % 3 == 2 ? 1 : 0; }

std::pair<mpz_class, mpz_class> u_block(const GrowthFunction& g, long k) {
  if (k < 1) throw std::invalid_argument("u_block: k must be >= 1");
  const long gk = g(k);
  if (gk < 1) throw std::invalid_argument("u_block: g(k) must be >= 1");
  mpz_class lo;
  mpz_ui_pow_ui(lo.get_mpz_t(), 4, static_cast<unsigned long>(gk));
  lo += u_epsilon(k);
  return {lo, lo + k};
}

std::pair<mpz_class, mpz_class> USequence::block(long k) const {
  long prev = 0;
  for (long j = 1; j <= k; ++j) {
    long gj = g_(j);
    if (j > 1 && gj <= prev) {
      throw std::invalid_argument("USequence: growth function not strictly increasing at k=" +
                                  std::to_string(j));
    }
    prev = gj;
  }
  return u_block(g_, k);
}

std::vector<USequence::Element> USequence::elements_upto(const mpz_class& bound) const {
  std::vector<Element> out;
  long prev = 0;
  for (long k = 1;; ++k) {
    const long gk = g_(k);
    if (k > 1 && gk <= prev) {
      throw std::invalid_argument("USequence: growth function not strictly increasing at k=" +
                                  std::to_string(k));
    }
    prev = gk;
    auto [lo, hi] = u_block(g_, k);
    if (lo > bound) break;  // block minima strictly increase with k
    out.push_back({lo, k, 2 * k});
    if (hi <= bound) out.push_back({hi, k, 2 * k + 1});
  }
  return out;
}

mpz_class USequence::counting(const mpz_class& x) const {
  if (x < 1) return 0;
  return mpz_class(long(elements_upto(x).size()));
}

VerificationReport check_u_properties(const GrowthFunction& g, long kmax) {
  if (kmax < 2) throw std::invalid_argument("check_u_properties: kmax must be >= 2");
  VerificationReport rep;
  rep.check = "u-properties";
  rep.checked_lo = 1;
  rep.checked_hi = kmax;

  long prev = 0;
  std::vector<std::pair<mpz_class, mpz_class>> blocks(kmax + 1);
  for (long k = 1; k <= kmax; ++k) {
    const long gk = g(k);
    if (k > 1 && gk <= prev) {
      throw std::invalid_argument(
          "check_u_properties: growth function not strictly increasing at k=" +
          std::to_string(k));
    }
    prev = gk;
    blocks[k] = u_block(g, k);
  }

  auto each = [&](long k, auto&& fn) {
    fn(blocks[k].first);
    fn(blocks[k].second);
  };

  // (i) no element divisible by 3
  for (long k = 1; k <= kmax; ++k) {
    each(k, [&](const mpz_class& u) {
      if (mpz_divisible_ui_p(u.get_mpz_t(), 3)) {
        rep.fail(Witness{"multiple-of-3", {u}, u});
      }
    });
  }

  // earlier elements flattened once; prefix of length 2(k-1) = all blocks < k
  std::vector<mpz_class> earlier;
  for (long k = 1; k <= kmax; ++k) {
    each(k, [&](const mpz_class& u) { earlier.push_back(u); });
  }

  // (ii) u + u' > u'' + u''' for u in block k, the rest from blocks < k,
  //      all quadruples expanded (pair sums cached so the loop is compares only)
  const std::size_t m = earlier.size();
  std::vector<mpz_class> pair_sum(m * m);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t c = 0; c < m; ++c) pair_sum[b * m + c] = earlier[b] + earlier[c];
  }
  for (long k = 2; k <= kmax; ++k) {
    const std::size_t limit = std::size_t(2 * (k - 1));
    each(k, [&](const mpz_class& u) {
      for (std::size_t a = 0; a < limit; ++a) {
        const mpz_class lhs = u + earlier[a];
        for (std::size_t b = 0; b < limit; ++b) {
          for (std::size_t c = 0; c < limit; ++c) {
            if (lhs <= pair_sum[b * m + c]) {
              rep.fail(Witness{"sum-dominance", {u, earlier[a], earlier[b], earlier[c]},
                               pair_sum[b * m + c] - lhs});
              return;
            }
          }
        }
      }
    });
  }

  // (iii) u - u' > u/2 for u in block k, u' in blocks < k
  for (long k = 2; k <= kmax; ++k) {
    const std::size_t limit = std::size_t(2 * (k - 1));
    each(k, [&](const mpz_class& u) {
      for (std::size_t a = 0; a < limit; ++a) {
        if (2 * (u - earlier[a]) <= u) {
          rep.fail(Witness{"gap-too-small", {u, earlier[a]}, u - earlier[a]});
          return;
        }
      }
    });
  }

  return rep;
}

}  // namespace pds
