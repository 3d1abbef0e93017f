#include "pds/core.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

namespace pds {
namespace {

void require_nonempty(const IntegerSet& A, const char* who) {
  if (A.empty()) throw std::invalid_argument(std::string(who) + ": empty set input");
}

std::vector<int64_t> as_int64(const IntegerSet& A) {
  std::vector<int64_t> v;
  v.reserve(A.size());
  for (const auto& x : A) v.push_back(x.get_si());
  return v;
}

Witness collision_witness(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                          const mpz_class& d) {
  return Witness{"difference-collision", {a, b, c, d}, a - b};
}

// First two pairs (i < j) with v[j] - v[i] == d, in ascending i order.
Witness recover_collision_i64(const std::vector<int64_t>& v, int64_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> hits;
  for (std::size_t i = 0; i < v.size() && hits.size() < 2; ++i) {
    auto it = std::lower_bound(v.begin() + i + 1, v.end(), v[i] + d);
    if (it != v.end() && *it == v[i] + d) hits.emplace_back(i, it - v.begin());
  }
  // A set bit guarantees two such pairs exist.
  const auto [i1, j1] = hits[0];
  const auto [i2, j2] = hits[1];
  return collision_witness(mpz_class(v[j1]), mpz_class(v[i1]), mpz_class(v[j2]),
                           mpz_class(v[i2]));
}

// Incremental hash-set scan in (i,j) lexicographic order; the witness pairs
// are exactly the first collision encountered that way.
bool sidon_hashset_i64(const std::vector<int64_t>& v, VerificationReport& rep) {
  const std::size_t n = v.size();
  std::unordered_set<int64_t> seen;
  seen.reserve(std::min<std::size_t>(n * (n - 1), std::size_t(1) << 26));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int64_t d = v[j] - v[i];
      if (!seen.insert(d).second) {
        rep.fail(recover_collision_i64(v, d));
        return false;
      }
    }
  }
  return true;
}

// Bitset over difference values, swept in bounded chunks so memory stays
// flat no matter the span. Each pair is visited in exactly one chunk, and
// within a chunk the writes ascend, which keeps the loop streaming.
bool sidon_bitset_i64(const std::vector<int64_t>& v, int64_t chunk_bits,
                      VerificationReport& rep) {
  const std::size_t n = v.size();
  const int64_t span = v.back() - v.front();
  std::vector<uint64_t> bits;
  for (int64_t lo = 1; lo <= span; lo += chunk_bits) {
    const int64_t hi = std::min(span, lo + chunk_bits - 1);
    bits.assign(std::size_t((hi - lo) / 64 + 1), 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto first = std::lower_bound(v.begin() + i + 1, v.end(), v[i] + lo);
      auto last = std::upper_bound(first, v.end(), v[i] + hi);
      for (auto it = first; it != last; ++it) {
        const uint64_t offset = uint64_t(*it - v[i] - lo);
        uint64_t& word = bits[offset >> 6];
        const uint64_t mask = uint64_t(1) << (offset & 63);
        if (word & mask) {
          rep.fail(recover_collision_i64(v, *it - v[i]));
          return false;
        }
        word |= mask;
      }
    }
  }
  return true;
}

bool sidon_map_mpz(const IntegerSet& A, VerificationReport& rep) {
  std::map<mpz_class, std::pair<std::size_t, std::size_t>> seen;
  const std::size_t n = A.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      mpz_class d = A[j] - A[i];
      auto [it, fresh] = seen.try_emplace(std::move(d), i, j);
      if (!fresh) {
        const auto [i1, j1] = it->second;
        rep.fail(collision_witness(A[j1], A[i1], A[j], A[i]));
        return false;
      }
    }
  }
  return true;
}

}  // namespace

mpz_class diff_count(const IntegerSet& A, const IntegerSet& B, const mpz_class& u) {
  require_nonempty(A, "diff_count");
  require_nonempty(B, "diff_count");
  // #{(a,b) : a - b = u} = #{b : b + u in A}
  long count = 0;
  for (const auto& b : B) {
    if (A.contains(b + u)) ++count;
  }
  return mpz_class(count);
}

mpz_class sum_count(const IntegerSet& A, const mpz_class& u) {
  require_nonempty(A, "sum_count");
  long count = 0;
  for (const auto& a : A) {
    if (2 * a > u) break;  // a <= a' forces 2a <= u
    if (A.contains(u - a)) ++count;
  }
  return mpz_class(count);
}

VerificationReport is_sidon(const IntegerSet& A) {
  VerificationReport rep;
  rep.check = "sidon";
  if (A.size() < 2) return rep;
  rep.checked_lo = 1;
  rep.checked_hi = A.max() - A.min();

  if (!A.fits_int64()) {
    sidon_map_mpz(A, rep);
    return rep;
  }
  const auto v = as_int64(A);
  if (A.size() <= 2000) {
    sidon_hashset_i64(v, rep);
    return rep;
  }
  const int64_t span = v.back() - v.front();
  const int64_t chunk_bits = int64_t(1) << 31;  // 256 MiB of bits per pass
  if ((span - 1) / chunk_bits + 1 <= 256) {
    sidon_bitset_i64(v, chunk_bits, rep);
  } else {
    // Very sparse large set: fall back to hashing all differences.
    sidon_hashset_i64(v, rep);
  }
  return rep;
}

VerificationReport coverage(const IntegerSet& A, const mpz_class& k) {
  if (k < 1) throw std::invalid_argument("coverage: k must be positive");
  VerificationReport rep;
  rep.check = "coverage";
  rep.checked_lo = 1;
  rep.checked_hi = k;
  for (mpz_class n = 1; n <= k; ++n) {
    bool found = false;
    for (const auto& a : A) {
      if (A.contains(a + n)) {
        found = true;
        break;
      }
    }
    if (!found) rep.fail(Witness{"missing-difference", {}, n});
  }
  return rep;
}

VerificationReport is_perfect_diff_prefix(const IntegerSet& A, const mpz_class& k) {
  if (k < 1) throw std::invalid_argument("is_perfect_diff_prefix: k must be positive");
  VerificationReport rep;
  rep.check = "perfect-diff-prefix";
  rep.checked_lo = 1;
  rep.checked_hi = k;
  if (A.size() >= 2) {
    mpz_class span = A.max() - A.min();
    if (span > k) rep.checked_hi = span;
  }
  // Sidon gives d(n) <= 1 everywhere; coverage gives d(n) >= 1 on [1,k].
  auto sid = is_sidon(A);
  for (auto& w : sid.witnesses) rep.fail(std::move(w));
  auto cov = coverage(A, k);
  for (auto& w : cov.witnesses) rep.fail(std::move(w));
  return rep;
}

mpz_class counting_function(const IntegerSet& A, const mpz_class& x) {
  const auto& v = A.values();
  auto hi = std::upper_bound(v.begin(), v.end(), x);
  auto lo = std::upper_bound(v.begin(), v.end(), mpz_class(0));
  if (hi < lo) return 0;
  return mpz_class(long(hi - lo));
}

std::optional<mpz_class> t_value(const IntegerSet& A, const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("t_value: n must be positive");
  std::vector<mpz_class> hits;
  for (const auto& a : A) {
    if (A.contains(a + n)) hits.push_back(a);
  }
  if (hits.empty()) return std::nullopt;
  if (hits.size() == 1) return hits.front();
  throw NonUniqueDifference(
      "t_value: difference " + n.get_str() + " has " + std::to_string(hits.size()) +
          " representations",
      std::move(hits));
}

IntegerSet dilate(const IntegerSet& A, const mpz_class& c) {
  if (c <= 0) throw std::invalid_argument("dilate: c must be a positive integer");
  std::vector<mpz_class> out;
  out.reserve(A.size());
  for (const auto& a : A) out.push_back(c * a);
  return IntegerSet::from_sorted(std::move(out));
}

VerificationReport union_decomposition_check(const IntegerSet& A1, const IntegerSet& A2,
                                             const mpz_class& n) {
  require_nonempty(A1, "union_decomposition_check");
  require_nonempty(A2, "union_decomposition_check");
  if (!A1.disjoint_with(A2)) {
    throw std::invalid_argument("union_decomposition_check: sets must be disjoint");
  }
  const IntegerSet whole = A1.unioned(A2);
  const mpz_class d_whole = diff_count(whole, whole, n);
  const mpz_class d1 = diff_count(A1, A1, n);
  const mpz_class d2 = diff_count(A2, A2, n);
  const mpz_class d12 = diff_count(A1, A2, n);
  const mpz_class d21 = diff_count(A2, A1, n);

  VerificationReport rep;
  rep.check = "union-decomposition";
  rep.checked_lo = n;
  rep.checked_hi = n;
  if (d_whole != d1 + d2 + d12 + d21) {
    rep.fail(Witness{"decomposition-mismatch", {d_whole, d1, d2, d12, d21}, n});
  }
  return rep;
}

}  // namespace pds
