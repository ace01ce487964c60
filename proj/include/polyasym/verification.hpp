#pragma once

#include "polyasym/precision.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyasym {

/// One cross-check: a computed value against a reference at a tolerance.
/// pass is re-derivable as abs_diff <= tolerance.
struct VerificationRecord {
  std::string name;
  ExtReal computed;
  ExtReal reference;
  ExtReal abs_diff;
  ExtReal tolerance;
  bool pass = false;
};

inline VerificationRecord make_record(std::string name, const ExtReal& computed,
                                      const ExtReal& reference, const ExtReal& tolerance) {
  VerificationRecord r;
  r.name = std::move(name);
  r.computed = computed;
  r.reference = reference;
  r.abs_diff = abs(computed - reference);
  r.tolerance = tolerance;
  r.pass = r.abs_diff <= tolerance;
  return r;
}

inline bool all_pass(const std::vector<VerificationRecord>& records) {
  for (const auto& r : records) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace polyasym
