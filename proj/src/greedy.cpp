#include "pds/greedy.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace pds {
namespace {

// Positive-difference membership as a growable bitset. Probes beyond the
// current capacity are misses; capacity grows only on insert. Differences
// are bounded by the largest element, so this stays modest.
class DiffBits {
 public:
  bool contains(int64_t d) const {
    return d >= 0 && d < cap_ && (bits_[std::size_t(d >> 6)] >> (d & 63)) & 1;
  }
  void insert(int64_t d) {
    if (d >= cap_) {
      int64_t next = std::max<int64_t>(cap_ == 0 ? 1024 : cap_ * 2, d + 1);
      bits_.resize(std::size_t((next + 63) / 64), 0);
      cap_ = next;
    }
    bits_[std::size_t(d >> 6)] |= uint64_t(1) << (d & 63);
  }

 private:
  std::vector<uint64_t> bits_;
  int64_t cap_ = 0;
};

}  // namespace

GreedyTrace build_greedy(long N) {
  if (N < 1) throw std::invalid_argument("build_greedy: N must be >= 1");

  // int64 is ample here: adjoined elements stay far below 10 * N^3
  std::vector<int64_t> a = {0, 1};
  DiffBits diffs, members;
  diffs.insert(1);
  members.insert(0);
  members.insert(1);

  GreedyTrace trace;
  trace.upto = N;

  for (int64_t n = 2; n <= N; ++n) {
    if (diffs.contains(n)) continue;
    const auto in_set = [&](int64_t x) { return members.contains(x); };
    for (int64_t m = 0;; ++m) {
      if (in_set(m) || in_set(m + n)) continue;
      bool ok = true;
      if (m > a.back()) {
        // all fresh differences are positive; within one candidate they come
        // from distinct elements, and a collision across the two candidates
        // would need a pair at distance n, which is exactly what is missing.
        // The one exception: m - x = n itself, i.e. x = m - n.
        // Probe the largest elements first: small differences are dense, so
        // bad candidates die on the first few probes.
        for (auto it = a.rbegin(); it != a.rend(); ++it) {
          if (diffs.contains(m - *it) || diffs.contains(m + n - *it)) {
            ok = false;
            break;
          }
        }
        if (ok && in_set(m - n)) ok = false;
      } else {
        // candidate sits inside the set's range: check absolute values and
        // local duplicates explicitly
        std::vector<int64_t> fresh;
        for (int64_t c : {m, m + n}) {
          for (int64_t x : a) {
            const int64_t d = c > x ? c - x : x - c;
            if (diffs.contains(d)) {
              ok = false;
              break;
            }
            fresh.push_back(d);
          }
          if (!ok) break;
        }
        if (ok) {
          fresh.push_back(n);
          std::sort(fresh.begin(), fresh.end());
          if (std::adjacent_find(fresh.begin(), fresh.end()) != fresh.end()) ok = false;
        }
      }
      if (!ok) continue;

      for (int64_t c : {m, m + n}) {
        for (int64_t x : a) diffs.insert(c > x ? c - x : x - c);
      }
      diffs.insert(n);
      members.insert(m);
      members.insert(m + n);
      a.insert(std::lower_bound(a.begin(), a.end(), m), m);
      a.insert(std::lower_bound(a.begin(), a.end(), m + n), m + n);
      trace.pair_origin[n] = {mpz_class(m), mpz_class(m + n)};
      break;
    }
  }

  std::vector<mpz_class> out;
  out.reserve(a.size());
  for (int64_t x : a) out.emplace_back(x);
  trace.final_set = IntegerSet::from_sorted(std::move(out));

  auto rep = is_perfect_diff_prefix(trace.final_set, mpz_class(N));
  if (!rep.holds) {
    throw InvariantViolation("build_greedy: result not a perfect difference prefix\n" +
                             summary(rep));
  }
  for (long n = 1; n <= N; ++n) {
    trace.t_values[n] = *t_value(trace.final_set, mpz_class(n));
  }
  return trace;
}

std::vector<TGrowthRow> t_growth_report(const GreedyTrace& trace) {
  std::vector<TGrowthRow> rows;
  rows.reserve(trace.t_values.size());
  for (const auto& [n, t] : trace.t_values) {
    mpz_class cube = mpz_class(n) * n * n;
    rows.push_back({n, t, std::move(cube)});
  }
  return rows;
}

TGrowthRow max_ratio_row(const std::vector<TGrowthRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("max_ratio_row: no rows");
  const TGrowthRow* best = &rows.front();
  for (const auto& row : rows) {
    // row.t / row.n_cubed > best->t / best->n_cubed, cross-multiplied
    if (row.t * best->n_cubed > best->t * row.n_cubed) best = &row;
  }
  return *best;
}

}  // namespace pds
