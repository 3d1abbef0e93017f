#include "pds/integer_set.hpp"

#include <algorithm>
#include <sstream>

namespace pds {

IntegerSet::IntegerSet(std::initializer_list<long> values) {
  std::vector<mpz_class> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  *this = from_values(std::move(v));
}

IntegerSet IntegerSet::from_values(std::vector<mpz_class> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1]) {
      throw std::invalid_argument("IntegerSet: duplicate element " + values[i].get_str());
    }
  }
  IntegerSet s;
  s.values_ = std::move(values);
  return s;
}

IntegerSet IntegerSet::from_sorted(std::vector<mpz_class> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) {
      throw std::invalid_argument("IntegerSet: elements not strictly increasing at index " +
                                  std::to_string(i));
    }
  }
  IntegerSet s;
  s.values_ = std::move(values);
  return s;
}

const mpz_class& IntegerSet::min() const {
  if (empty()) throw std::invalid_argument("IntegerSet::min on empty set");
  return values_.front();
}

const mpz_class& IntegerSet::max() const {
  if (empty()) throw std::invalid_argument("IntegerSet::max on empty set");
  return values_.back();
}

bool IntegerSet::contains(const mpz_class& x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

bool IntegerSet::disjoint_with(const IntegerSet& other) const {
  auto i = values_.begin();
  auto j = other.values_.begin();
  while (i != values_.end() && j != other.values_.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

IntegerSet IntegerSet::unioned(const IntegerSet& other) const {
  std::vector<mpz_class> merged;
  merged.reserve(size() + other.size());
  std::merge(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  IntegerSet s;
  s.values_ = std::move(merged);
  return s;
}

IntegerSet IntegerSet::shifted(const mpz_class& offset) const {
  std::vector<mpz_class> out;
  out.reserve(size());
  for (const auto& v : values_) out.push_back(v + offset);
  IntegerSet s;
  s.values_ = std::move(out);
  return s;
}

bool IntegerSet::fits_int64() const {
  // Leave headroom so differences and small sums stay inside int64 too.
  static const mpz_class bound = mpz_class(1) << 62;
  for (const auto& v : values_) {
    if (v >= bound || v <= -bound) return false;
  }
  return true;
}

std::string to_string(const IntegerSet& set, std::size_t max_elements) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i >= max_elements) {
      out << ", ... (" << set.size() << " elements)";
      break;
    }
    if (i) out << ", ";
    out << set[i].get_str();
  }
  out << '}';
  return out.str();
}

std::string to_string(const Witness& w) {
  std::ostringstream out;
  out << w.kind << " (";
  for (std::size_t i = 0; i < w.tuple.size(); ++i) {
    if (i) out << ", ";
    out << w.tuple[i].get_str();
  }
  out << ") value=" << w.value.get_str();
  return out.str();
}

std::string summary(const VerificationReport& report) {
  std::ostringstream out;
  out << report.check << ": " << (report.holds ? "holds" : "FAILS")
      << " on [" << report.checked_lo.get_str() << ", " << report.checked_hi.get_str() << "]";
  for (const auto& w : report.witnesses) out << "\n  witness: " << to_string(w);
  return out.str();
}

}  // namespace pds
