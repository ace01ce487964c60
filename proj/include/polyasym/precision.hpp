#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <atomic>
#include <ios>
#include <stdexcept>
#include <string>

namespace polyasym {

// Arbitrary-precision real carried at a process-global working precision.
// The precision is fixed once at startup (see set_working_precision); all
// constants and caches are keyed to it.
using ExtReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

namespace detail {

// Guard digits carried internally beyond the requested precision, so that
// quantities compared at 10^(c-P) tolerances are not limited by roundoff.
inline constexpr int kGuardDigits = 10;

inline std::atomic<int>& nominal_digits_atomic() {
  static std::atomic<int> digits{60};
  return digits;
}

}  // namespace detail

/// Requested precision P in significant decimal digits (default 60).
inline int working_digits() { return detail::nominal_digits_atomic().load(); }

/// Digits actually carried by ExtReal arithmetic (P plus guard digits).
inline int internal_digits() { return working_digits() + detail::kGuardDigits; }

/// Applies the working precision to the calling thread. New threads start
/// with the library default, so every entry point calls this first.
inline void ensure_thread_precision() {
  const int digits = internal_digits();
  if (ExtReal::default_precision() != static_cast<unsigned>(digits)) {
    ExtReal::default_precision(digits);
  }
}

/// Fixes the process-global working precision. Must be called before any
/// computation; values created earlier keep their old precision.
inline void set_working_precision(int digits) {
  if (digits < 30) {
    throw std::invalid_argument("working precision must be at least 30 digits");
  }
  detail::nominal_digits_atomic().store(digits);
  ensure_thread_precision();
}

/// 10^e at working precision.
inline ExtReal pow10(int e) {
  ensure_thread_precision();
  ExtReal r;
  mpfr_ui_pow_ui(r.backend().data(), 10u, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) r = 1 / r;
  return r;
}

/// 10^(offset - P): the shape of every tolerance used in the checks.
inline ExtReal tol_at(int offset) { return pow10(offset - working_digits()); }

/// Decimal text that round-trips exactly (full internal precision).
inline std::string to_repr(const ExtReal& x) { return x.str(); }

inline ExtReal from_repr(const std::string& s) { return ExtReal(s); }

/// Scientific decimal string at the requested precision; used for all emitted
/// tables so that output is deterministic and diffable.
inline std::string to_decimal(const ExtReal& x) {
  return x.str(working_digits(), std::ios_base::scientific);
}

/// Fixed-point rendering with `frac_digits` digits after the point (rounded).
inline std::string to_fixed(const ExtReal& x, int frac_digits) {
  return x.str(frac_digits, std::ios_base::fixed);
}

/// Fixed-point rendering truncated (not rounded) after `frac_digits` digits;
/// matches the way tables of leading digits are usually quoted.
inline std::string to_fixed_truncated(const ExtReal& x, int frac_digits) {
  std::string s = to_fixed(x, frac_digits + 6);
  const auto dot = s.find('.');
  if (dot == std::string::npos) return s;
  return s.substr(0, dot + 1 + static_cast<std::size_t>(frac_digits));
}

}  // namespace polyasym
