#include "pds/theorem1.hpp"

#include <algorithm>
#include <set>

namespace pds {
namespace {

mpz_class diff_count_raw(const std::vector<mpz_class>& sorted, const mpz_class& n) {
  long count = 0;
  for (const auto& a : sorted) {
    if (std::binary_search(sorted.begin(), sorted.end(), a + n)) ++count;
  }
  return mpz_class(count);
}

}  // namespace

ConstructionTrace build_b0(const IntegerSet& B, const GrowthFunction& g,
                           const mpz_class& horizon) {
  if (!g.fn) throw std::invalid_argument("build_b0: growth function not set");
  if (B.empty()) throw std::invalid_argument("build_b0: source set is empty");
  if (B.min() < 1) throw std::invalid_argument("build_b0: source elements must be positive");
  if (!is_sidon(B).holds) throw std::invalid_argument("build_b0: source set is not Sidon");
  if (horizon < 3 * B.max()) {
    throw std::invalid_argument("build_b0: horizon must be at least 3*max(B)");
  }

  ConstructionTrace trace;
  trace.source_sidon = B;
  trace.growth = g;
  trace.horizon = horizon;

  const IntegerSet dilated = dilate(B, 3);
  const auto& bp = dilated.values();

  // Every removal pattern forces its largest auxiliary value under twice the
  // element it removes, so values <= 2*horizon exhaust all of them.
  const USequence useq(g);
  const auto U = useq.elements_upto(2 * horizon);

  std::array<std::set<mpz_class>, 4> removed;

  // c1: b = u - u' + b' with b' < b, u from a later block than u'
  for (const auto& u : U) {
    for (const auto& u2 : U) {
      if (u2.block_k >= u.block_k) continue;
      const mpz_class d = u.value - u2.value;
      for (const auto& b2 : bp) {
        mpz_class b = b2 + d;
        if (b > b2 && dilated.contains(b)) removed[0].insert(b);
      }
    }
  }

  // c2: b = u + u' - b' with b >= b', u and u' any auxiliary values
  for (const auto& u : U) {
    for (const auto& u2 : U) {
      const mpz_class s = u.value + u2.value;
      for (const auto& b2 : bp) {
        mpz_class b = s - b2;
        if (b >= b2 && dilated.contains(b)) removed[1].insert(b);
      }
    }
  }

  // c3: b = u + u' - u'' with u'' from an earlier block than u, u' <= u
  for (const auto& u : U) {
    for (const auto& u3 : U) {
      if (u3.block_k >= u.block_k) continue;
      for (const auto& u2 : U) {
        if (u2.value > u.value) continue;
        mpz_class b = u.value + u2.value - u3.value;
        if (dilated.contains(b)) removed[2].insert(b);
      }
    }
  }

  // c4: |b - u_i| <= i
  for (const auto& u : U) {
    const mpz_class lo = u.value - u.flat_index;
    const mpz_class hi = u.value + u.flat_index;
    auto first = std::lower_bound(bp.begin(), bp.end(), lo);
    auto last = std::upper_bound(first, bp.end(), hi);
    for (auto it = first; it != last; ++it) removed[3].insert(*it);
  }

  std::set<mpz_class> removed_all;
  for (int c = 0; c < 4; ++c) {
    trace.removed[c] =
        IntegerSet::from_sorted({removed[c].begin(), removed[c].end()});
    removed_all.insert(removed[c].begin(), removed[c].end());
  }

  std::vector<mpz_class> kept;
  for (const auto& b : bp) {
    if (!removed_all.count(b)) kept.push_back(b);
  }
  trace.b0 = IntegerSet::from_sorted(std::move(kept));

  for (const auto& b : trace.b0) {
    if (!mpz_divisible_ui_p(b.get_mpz_t(), 3)) {
      throw InvariantViolation("build_b0: element " + b.get_str() + " not divisible by 3");
    }
  }
  if (!trace.b0.empty() && !is_sidon(trace.b0).holds) {
    throw InvariantViolation("build_b0: result is not Sidon");
  }
  return trace;
}

ConstructionTrace build_a(ConstructionTrace trace, long K, bool audit) {
  if (K < 1) throw std::invalid_argument("build_a: K must be >= 1");
  if (!trace.growth.fn) throw std::invalid_argument("build_a: trace has no growth function");
  const USequence useq(trace.growth);

  std::vector<mpz_class> a(trace.b0.values());
  trace.steps.clear();
  trace.audited = audit;

  for (long k = 1; k <= K; ++k) {
    const bool take = a.empty() || diff_count_raw(a, mpz_class(k)) == 0;
    trace.steps.push_back({k, take});
    if (!take) continue;

    auto [lo, hi] = useq.block(k);
    if (audit && !a.empty()) {
      // every difference into the new block must be fresh and larger than k
      IntegerSet prev = IntegerSet::from_sorted(a);
      IntegerSet block = IntegerSet::from_sorted({lo, hi});
      for (const auto& x : a) {
        for (const mpz_class& u : {lo, hi}) {
          const mpz_class n = x - u;
          if (abs(n) <= k) {
            throw InvariantViolation("build_a audit: step " + std::to_string(k) +
                                     " difference " + n.get_str() + " within the step index");
          }
          if (diff_count(prev, prev, n) != 0) {
            throw InvariantViolation("build_a audit: step " + std::to_string(k) +
                                     " difference " + n.get_str() +
                                     " already represented in the prefix");
          }
          if (diff_count(block, prev, n) != 0) {
            throw InvariantViolation("build_a audit: step " + std::to_string(k) +
                                     " difference " + n.get_str() +
                                     " also realized from the block into the prefix");
          }
        }
      }
    }
    a.insert(std::lower_bound(a.begin(), a.end(), lo), lo);
    a.insert(std::lower_bound(a.begin(), a.end(), hi), hi);
  }

  trace.final_set = IntegerSet::from_sorted(std::move(a));
  auto report = is_perfect_diff_prefix(trace.final_set, mpz_class(K));
  if (!report.holds) {
    throw InvariantViolation("build_a: result is not a perfect difference prefix on [1," +
                             std::to_string(K) + "]\n" + summary(report));
  }
  return trace;
}

VerificationReport removal_bound_check(const ConstructionTrace& trace, const mpz_class& x) {
  if (!trace.growth.fn) {
    throw std::invalid_argument("removal_bound_check: trace has no growth function");
  }
  if (x < 1) throw std::invalid_argument("removal_bound_check: x must be positive");
  if (x > trace.horizon) {
    throw std::invalid_argument("removal_bound_check: x exceeds the trace horizon");
  }

  VerificationReport rep;
  rep.check = "removal-bounds";
  rep.checked_lo = 1;
  rep.checked_hi = x;

  const USequence useq(trace.growth);
  const mpz_class u2x = useq.counting(2 * x);
  const mpz_class u2 = u2x * u2x;
  const mpz_class u3 = u2 * u2x;

  auto r_at = [&](int c) {
    const auto& v = trace.removed[c].values();
    return mpz_class(long(std::upper_bound(v.begin(), v.end(), x) - v.begin()));
  };

  const mpz_class bounds[4] = {u2, u2, u3, 2 * u2 + u2x};
  const char* kinds[4] = {"removal-bound-c1", "removal-bound-c2", "removal-bound-c3",
                          "removal-bound-c4"};
  for (int c = 0; c < 4; ++c) {
    const mpz_class tally = r_at(c);
    if (tally > bounds[c]) {
      rep.fail(Witness{kinds[c], {tally, bounds[c]}, x});
    }
  }

  const mpz_class ax = counting_function(trace.final_set, x);
  const mpz_class bx3 = counting_function(trace.source_sidon, x / 3);
  const mpz_class budget = u3 + 4 * u2 + u2x;
  if (ax < bx3 - budget) {
    rep.fail(Witness{"aggregate-bound", {ax, bx3, budget}, x});
  }
  return rep;
}

}  // namespace pds
