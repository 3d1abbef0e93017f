#include "pds/kruckeberg.hpp"

#include "pds/primes.hpp"

#include <algorithm>

namespace pds {
namespace {

// a + b == target with a <= b, both in the sorted list. The range pre-check
// makes far-out targets O(1), which is what keeps the sumset hypotheses
// cheap on the large blocks.
std::optional<std::pair<mpz_class, mpz_class>> two_sum(const std::vector<mpz_class>& v,
                                                       const mpz_class& target) {
  if (v.empty() || target < 2 * v.front() || target > 2 * v.back()) return std::nullopt;
  std::size_t i = 0, j = v.size() - 1;
  while (i <= j) {
    const mpz_class s = v[i] + v[j];
    if (s == target) return std::make_pair(v[i], v[j]);
    if (s < target) {
      ++i;
    } else {
      if (j == 0) break;
      --j;
    }
  }
  return std::nullopt;
}

// d in L - L, i.e. some x in L with x + d also in L.
std::optional<mpz_class> shift_hit(const IntegerSet& L, const mpz_class& d) {
  for (const auto& x : L) {
    if (L.contains(x + d)) return x;
  }
  return std::nullopt;
}

// (Ci + Ci - Ci) n Cj: report t in Cj reachable as a + b - c over Ci.
std::optional<Witness> sum_shift_overlap(const IntegerSet& Ci, const IntegerSet& Cj) {
  for (const auto& t : Cj) {
    for (const auto& c : Ci) {
      if (auto pair = two_sum(Ci.values(), t + c)) {
        return Witness{"sum-shift-hit", {pair->first, pair->second, c, t}, t};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport union_lemma_check(const IntegerSet& C1, const IntegerSet& C2) {
  if (!C1.disjoint_with(C2)) {
    throw std::invalid_argument("union_lemma_check: sets are not disjoint");
  }
  if (!is_sidon(C1).holds) {
    throw std::invalid_argument("union_lemma_check: first set is not Sidon");
  }
  if (!is_sidon(C2).holds) {
    throw std::invalid_argument("union_lemma_check: second set is not Sidon");
  }

  VerificationReport rep;
  rep.check = "union-lemma";
  if (!C1.empty() && !C2.empty()) {
    rep.checked_lo = std::min(C1.min(), C2.min());
    rep.checked_hi = std::max(C1.max(), C2.max());
  }

  // enumerate pairs on the smaller set, probe the larger
  const IntegerSet& S = C1.size() <= C2.size() ? C1 : C2;
  const IntegerSet& L = C1.size() <= C2.size() ? C2 : C1;

  // (C1-C1) n (C2-C2) = {0}: difference sets are symmetric, so positive
  // differences of one side against the other settle both orderings.
  for (std::size_t i = 0; i + 1 < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      const mpz_class d = S[j] - S[i];
      if (auto x = shift_hit(L, d)) {
        rep.fail(Witness{"difference-overlap", {S[j], S[i], *x + d, *x}, d});
        goto differences_done;
      }
    }
  }
differences_done:

  // (C1+C1) n (C2+C2) = empty
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i; j < S.size(); ++j) {
      const mpz_class s = S[i] + S[j];
      if (auto pair = two_sum(L.values(), s)) {
        rep.fail(Witness{"sum-overlap", {S[i], S[j], pair->first, pair->second}, s});
        goto sums_done;
      }
    }
  }
sums_done:

  // (Ci+Ci-Ci) n Cj = empty, both orderings
  if (auto w = sum_shift_overlap(C1, C2)) rep.fail(std::move(*w));
  if (auto w = sum_shift_overlap(C2, C1)) rep.fail(std::move(*w));

  if (rep.holds && !C1.empty() && !C2.empty()) {
    // the lemma's conclusion must follow
    auto conclusion = is_sidon(C1.unioned(C2));
    if (!conclusion.holds) {
      throw InvariantViolation("union_lemma_check: hypotheses hold but the union fails "
                               "the Sidon check\n" + summary(conclusion));
    }
  }
  return rep;
}

KruckebergTrace build_kruckeberg(long K, const KruckebergOptions& options) {
  if (K < 2) throw std::invalid_argument("build_kruckeberg: K must be >= 2");

  if (options.start.empty() || !is_sidon(options.start).holds) {
    throw std::invalid_argument("build_kruckeberg: seed set must be nonempty Sidon");
  }
  KruckebergTrace trace;
  IntegerSet a = options.start;
  trace.completed_k = 1;

  for (long k = 2; k <= K; ++k) {
    const mpz_class l = a.max();
    const mpz_class p = next_prime(4 * l * l);
    const mpz_class top = 4 * p * p;
    if (top + k > options.max_element) {
      trace.truncated = true;
      break;
    }

    const PrunedSidonSet bp = prune_to_bp(p);
    const IntegerSet block = bp.pruned.shifted(p * p + 2 * l);

    bool union_verified = false;
    IntegerSet merged = a;
    if (!block.empty()) {
      if (options.audit) {
        auto rep = union_lemma_check(a, block);
        if (!rep.holds) {
          throw InvariantViolation("build_kruckeberg: union-lemma hypotheses fail at step " +
                                   std::to_string(k) + "\n" + summary(rep));
        }
        union_verified = true;
      }
      merged = a.unioned(block);
    }

    KruckebergStep step{k, l, p, block, std::nullopt};
    if (diff_count(a, a, mpz_class(k)) == 0) {
      const IntegerSet pair_set = IntegerSet::from_sorted({top, top + k});
      if (options.audit) {
        auto rep = union_lemma_check(merged, pair_set);
        if (!rep.holds) {
          throw InvariantViolation("build_kruckeberg: union-lemma hypotheses fail for the "
                                   "pair at step " + std::to_string(k) + "\n" + summary(rep));
        }
        union_verified = true;
      }
      merged = merged.unioned(pair_set);
      step.pair_added = std::make_pair(top, top + k);
    }

    // audit mode already verified exactly this set as a union conclusion
    if (!union_verified) {
      auto sid = is_sidon(merged);
      if (!sid.holds) {
        throw InvariantViolation("build_kruckeberg: step " + std::to_string(k) +
                                 " is not Sidon\n" + summary(sid));
      }
    }
    auto cov = coverage(merged, mpz_class(k));
    if (!cov.holds) {
      throw InvariantViolation("build_kruckeberg: step " + std::to_string(k) +
                               " misses a difference\n" + summary(cov));
    }

    const mpz_class x = 2 * p * p - p + l;
    trace.density.push_back({k, x, counting_function(merged, x)});
    trace.steps.push_back(std::move(step));
    trace.completed_k = k;
    a = std::move(merged);
  }

  trace.final_set = std::move(a);
  return trace;
}

DensityRatio density_ratio(const KruckebergTrace& trace, long k) {
  const KruckebergStep* step = nullptr;
  for (const auto& s : trace.steps) {
    if (s.k == k) step = &s;
  }
  if (!step) {
    throw std::invalid_argument("density_ratio: step " + std::to_string(k) +
                                " not present in trace");
  }
  DensityRatio out;
  out.k = k;
  out.p = step->p;
  out.x = 2 * step->p * step->p - step->p + step->l;
  out.count = counting_function(trace.final_set, out.x);

  mpz_class s = sqrt(4 * step->p);
  if (s * s < 4 * step->p) ++s;
  out.ceil_two_sqrt_p = s;
  const mpz_class lhs = 2 * out.count * out.count * step->p * step->p;
  const mpz_class rhs = (step->p - s) * (step->p - s) * out.x;
  out.squared_bound_holds = lhs >= rhs;

  // count / sqrt(x) to 6 digits, truncated; exact integer arithmetic only
  const mpz_class scaled = sqrt(out.count * out.count * mpz_class("1000000000000") / out.x);
  mpz_class whole = scaled / 1000000;
  mpz_class frac = scaled % 1000000;
  std::string f = frac.get_str();
  out.decimal = whole.get_str() + "." + std::string(6 - f.size(), '0') + f;
  return out;
}

}  // namespace pds
