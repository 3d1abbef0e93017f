#pragma once

// Exact integer-set arithmetic: representation counters, Sidon and
// perfect-difference predicates, coverage, counting function, dilation.
// Everything here is a pure function of immutable inputs; no floating point.

#include "pds/integer_set.hpp"

namespace pds {

/// Number of ordered pairs (a,b) in A x B with a - b = u.
/// diff_count(A, A, u) is the difference-representation counter d_A(u).
/// Throws std::invalid_argument when A or B is empty.
mpz_class diff_count(const IntegerSet& A, const IntegerSet& B, const mpz_class& u);

/// Number of pairs a <= a' in A with a + a' = u (a = a' allowed).
/// Throws std::invalid_argument when A is empty.
mpz_class sum_count(const IntegerSet& A, const mpz_class& u);

/// Sidon predicate: all nonzero differences of pairs are distinct.
/// On failure the report carries one witness (a,b,c,d) with a-b = c-d,
/// the first collision in scan order.
VerificationReport is_sidon(const IntegerSet& A);

/// Every n in [1,k] has at least one representation as a difference.
/// Missing values are listed as witnesses.
VerificationReport coverage(const IntegerSet& A, const mpz_class& k);

/// A is Sidon and every n in [1,k] has exactly one representation.
VerificationReport is_perfect_diff_prefix(const IntegerSet& A, const mpz_class& k);

/// Number of positive elements of A not exceeding x (0 never counted).
mpz_class counting_function(const IntegerSet& A, const mpz_class& x);

/// The unique x in A with x + n in A, when it exists.
/// Returns nullopt when no such x; throws NonUniqueDifference (with all
/// witnesses) when more than one exists.
std::optional<mpz_class> t_value(const IntegerSet& A, const mpz_class& n);

/// {c*a : a in A}. Throws std::invalid_argument when c == 0.
IntegerSet dilate(const IntegerSet& A, const mpz_class& c);

/// Checks d_{A1 u A2}(n) = d_{A1}(n) + d_{A2}(n) + d_{A1,A2}(n) + d_{A2,A1}(n)
/// for disjoint nonempty A1, A2. Throws std::invalid_argument otherwise.
VerificationReport union_decomposition_check(const IntegerSet& A1, const IntegerSet& A2,
                                             const mpz_class& n);

}  // namespace pds
