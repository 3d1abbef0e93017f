#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace pds {

/// Strictly increasing map from positive integers to positive integers.
/// Strict increase is validated lazily by the consumers that walk a range
/// of arguments (non-increasing values raise std::invalid_argument there).
struct GrowthFunction {
  std::string spec;  // "linear", "affine:c", or "scaled:c"
  std::function<long(long)> fn;

  long operator()(long k) const { return fn(k); }

  static GrowthFunction linear();
  static GrowthFunction affine(long c);   // k + c
  static GrowthFunction scaled(long c);   // c * k, c >= 1

  /// Parses "linear" | "affine:c" | "scaled:c".
  static GrowthFunction parse(const std::string& text);
};

}  // namespace pds
