#pragma once

// On-disk formats: one JSON document shape for integer sets (elements as
// decimal strings so values of any size survive byte-exactly) and one per
// trace kind. Traces reference their set document by content hash.

#include "pds/greedy.hpp"
#include "pds/kruckeberg.hpp"
#include "pds/theorem1.hpp"

#include <map>
#include <string>

namespace pds {

struct SetDocument {
  std::string kind = "integer-set";
  IntegerSet elements;
  std::map<std::string, std::string> meta;
};

/// FNV-1a 64-bit over the canonical element list; used to link trace
/// documents to their set document. Not cryptographic.
std::string content_hash(const IntegerSet& set);

std::string serialize(const SetDocument& doc);
/// Throws std::invalid_argument on malformed input (bad JSON, wrong kind,
/// non-numeric or non-increasing elements).
SetDocument parse_set_document(const std::string& text);

std::string serialize_trace(const ConstructionTrace& trace);
ConstructionTrace parse_theorem1_trace(const std::string& text);

std::string serialize_trace(const KruckebergTrace& trace);
std::string serialize_trace(const GreedyTrace& trace);
GreedyTrace parse_greedy_trace(const std::string& text);

/// "n/d" plus a 6-digit decimal approximation, both exact-integer derived.
std::string format_ratio(const mpz_class& num, const mpz_class& den);

/// Decimal expansion of num/den to 6 digits (rounded), no exponent form.
std::string decimal6(const mpz_class& num, const mpz_class& den);

}  // namespace pds
