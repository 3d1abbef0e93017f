#pragma once

// Sorted sets of arbitrary-precision integers plus the report/witness types
// shared by every verification predicate in this library.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pds {

// Thrown when a builder postcondition fails. Callers treat this as a bug in
// the construction, not bad user input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Thrown by t_value when more than one element realizes the difference.
class NonUniqueDifference : public std::runtime_error {
 public:
  NonUniqueDifference(const std::string& what, std::vector<mpz_class> witnesses)
      : std::runtime_error(what), witnesses(std::move(witnesses)) {}
  std::vector<mpz_class> witnesses;
};

/// Strictly increasing sequence of arbitrary-precision integers.
/// The empty set is representable; operations that require nonempty input
/// enforce that themselves.
class IntegerSet {
 public:
  IntegerSet() = default;

  // Convenience for literal sets in tests and small constructions.
  IntegerSet(std::initializer_list<long> values);

  /// Sorts and validates; throws std::invalid_argument on duplicates.
  static IntegerSet from_values(std::vector<mpz_class> values);

  /// Validates that `values` is already strictly increasing.
  static IntegerSet from_sorted(std::vector<mpz_class> values);

  const std::vector<mpz_class>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const mpz_class& operator[](std::size_t i) const { return values_[i]; }

  const mpz_class& min() const;
  const mpz_class& max() const;

  bool contains(const mpz_class& x) const;
  bool disjoint_with(const IntegerSet& other) const;

  /// Merge union (duplicates collapse).
  IntegerSet unioned(const IntegerSet& other) const;

  /// Elementwise translate by `offset`.
  IntegerSet shifted(const mpz_class& offset) const;

  /// True when every element (and every pairwise difference) fits in int64.
  bool fits_int64() const;

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool operator==(const IntegerSet& other) const = default;

 private:
  std::vector<mpz_class> values_;
};

/// One counterexample found by a verification predicate. `tuple` holds the
/// elements involved (e.g. a,b,c,d with a-b = c-d) and `value` the offending
/// difference or sum. `kind` names the violated clause.
struct Witness {
  std::string kind;
  std::vector<mpz_class> tuple;
  mpz_class value;
};

/// Outcome of a predicate check. holds == witnesses.empty() always.
/// [checked_lo, checked_hi] is the interval of values actually examined.
struct VerificationReport {
  std::string check;
  bool holds = true;
  std::vector<Witness> witnesses;
  mpz_class checked_lo = 0;
  mpz_class checked_hi = 0;

  void fail(Witness w) {
    holds = false;
    witnesses.push_back(std::move(w));
  }
};

std::string to_string(const IntegerSet& set, std::size_t max_elements = 16);
std::string to_string(const Witness& w);
std::string summary(const VerificationReport& report);

}  // namespace pds
