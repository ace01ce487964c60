#pragma once

#include "polyasym/bivariate.hpp"
#include "polyasym/complex_pair.hpp"
#include "polyasym/constants.hpp"
#include "polyasym/verification.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace polyasym {

/// Local expansion of Li_m at z = 1 in w = -ln z:
///   Li_m = (-1)^m/(m-1)! w^(m-1) (ln w - H_{m-1})
///        + sum_{j != m-1} (-1)^j zeta(m-j)/j! w^j.
/// Stored on the BivariatePoly carrier with eps -> w and L -> ln w.
struct SingularExpansion {
  int m = 0;
  BivariatePoly terms{0};
  int w_order = 0;

  ExtReal eval(const ExtReal& w) const {
    const ExtReal lw = log(w);
    ExtReal s(0);
    for (const auto& [k, v] : terms.terms()) {
      ExtReal t = v * pow(w, k.first);
      for (int j = 0; j < k.second; ++j) t *= lw;
      s += t;
    }
    return s;
  }
};

inline SingularExpansion li_singular_expansion(int m, int w_order) {
  if (m < 2) throw std::invalid_argument("li_singular_expansion: m >= 2 required");
  if (w_order < m) throw std::domain_error("li_singular_expansion: w_order >= m required");
  SingularExpansion e;
  e.m = m;
  e.w_order = w_order;
  e.terms = BivariatePoly(w_order);
  ExtReal fact(1);  // (m-1)!
  for (int k = 2; k < m; ++k) fact *= k;
  const ExtReal sign_m = (m % 2 == 0) ? ExtReal(1) : ExtReal(-1);
  e.terms.set(m - 1, 1, sign_m / fact);
  e.terms.set(m - 1, 0, -sign_m * harmonic(m - 1, 1) / fact);
  ExtReal jfact(1);
  for (int j = 0; j <= w_order; ++j) {
    if (j > 0) jfact *= j;
    if (j == m - 1) continue;
    const ExtReal sign_j = (j % 2 == 0) ? ExtReal(1) : ExtReal(-1);
    e.terms.set(j, 0, sign_j * detail::zeta_extended(m - j) / jfact);
  }
  return e;
}

namespace detail {

// Crossover to the singular expansion; below it the direct series converges
// comfortably, above it the expansion does.
inline const ExtReal& li_near_one_crossover() {
  static const ExtReal z0 = ExtReal(95) / 100;
  return z0;
}

inline int li_expansion_order_for_eval(int m) {
  // Terms of the expansion shrink by ~w/(2pi) per order; at the crossover
  // w ~ 0.0513, about one order per 2.08 digits.
  return m + static_cast<int>((internal_digits() + 8) / 2.08) + 2;
}

inline const SingularExpansion& li_eval_expansion(int m) {
  static std::map<std::pair<int, int>, SingularExpansion> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(internal_digits(), m);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, li_singular_expansion(m, li_expansion_order_for_eval(m))).first;
  }
  return it->second;
}

inline ExtReal li_direct_series(int m, const ExtReal& z) {
  // Tail bound: z^(K+1) / ((K+1)^m (1-z)) < 10^-P.
  const ExtReal cutoff = pow10(-internal_digits());
  const ExtReal one_minus = 1 - z;
  ExtReal sum(0), zk(1);
  for (long k = 1; k < 2000000; ++k) {
    zk *= z;
    sum += zk / pow(ExtReal(static_cast<unsigned long>(k)), m);
    if (zk * z / (pow(ExtReal(static_cast<unsigned long>(k + 1)), m) * one_minus) < cutoff) {
      return sum;
    }
  }
  throw std::runtime_error("li_direct_series: term budget exhausted");
}

inline void li_check_crossover_once();

}  // namespace detail

/// Li_m(z) for z in [0, 1]; direct series below the crossover, singular
/// expansion above it, zeta(m) at z = 1.
inline ExtReal li_eval(int m, const ExtReal& z) {
  if (m < 2) throw std::invalid_argument("li_eval: m >= 2 required");
  if (z < 0 || z > 1) {
    throw std::domain_error("li_eval: z in [0,1] required (see li_inversion_check for z > 1)");
  }
  if (z == 0) return ExtReal(0);
  if (z == 1) return detail::zeta_extended(m);
  detail::li_check_crossover_once();
  if (z > detail::li_near_one_crossover()) {
    return detail::li_eval_expansion(m).eval(-log(z));
  }
  return detail::li_direct_series(m, z);
}

namespace detail {

// Both branches must agree at the crossover; checked once per run.
inline void li_check_crossover_once() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    const ExtReal& z0 = li_near_one_crossover();
    const ExtReal tol = tol_at(10);
    for (int m = 2; m <= 6; ++m) {
      const ExtReal direct = li_direct_series(m, z0);
      const ExtReal via_expansion = li_eval_expansion(m).eval(-log(z0));
      if (abs(direct - via_expansion) > tol) {
        throw std::logic_error("li_eval: series and singular expansion disagree at crossover");
      }
    }
  });
}

}  // namespace detail

/// Li_m(1/2); for m = 2, 3 the classical closed forms are asserted.
inline ExtReal li_half_numeric(int m) {
  if (m < 2) throw std::invalid_argument("li_half_numeric: m >= 2 required");
  const ExtReal v = li_eval(m, ExtReal(1) / 2);
  if (m == 2 || m == 3) {
    const ConstantTable& c = constants();
    const ExtReal ref = (m == 2)
                            ? c.pi * c.pi / 12 - c.ln2 * c.ln2 / 2
                            : 7 * c.zeta(3) / 8 - c.pi * c.pi * c.ln2 / 12 + pow(c.ln2, 3) / 6;
    if (abs(v - ref) > tol_at(2)) {
      throw std::logic_error("li_half_numeric: closed form mismatch");
    }
  }
  return v;
}

namespace detail {

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k) at a complex argument.
inline ComplexPair bernoulli_poly(int n, const ComplexPair& x) {
  ComplexPair s;
  BigInt binom(1);  // C(n,k)
  for (int k = 0; k <= n; ++k) {
    s = s + (to_real(BigRational(binom)) * bernoulli_real(k)) * pow_int(x, n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return s;
}

}  // namespace detail

/// Inversion identity Li_m(z) = -(-1)^m Li_m(1/z) - (2 pi i)^m/m! B_m(1/2 + ln(-z)/(2 pi i))
/// evaluated at z = 2 and compared with the classical values of Li_m(2).
/// The branch ln(-z) = ln z + i pi is the one that reproduces them.
inline VerificationRecord li_inversion_check(int m) {
  if (m != 2 && m != 3) throw std::invalid_argument("li_inversion_check: m in {2,3} required");
  ensure_thread_precision();
  const ConstantTable& c = constants();
  const ComplexPair I(ExtReal(0), ExtReal(1));
  const ComplexPair two_pi_i(ExtReal(0), 2 * c.pi);
  const ComplexPair ln_neg_z(c.ln2, c.pi);  // ln(-2) = ln 2 + i pi
  const ComplexPair arg = ComplexPair(ExtReal(1) / 2) + ln_neg_z / two_pi_i;

  ExtReal mfact(1);
  for (int k = 2; k <= m; ++k) mfact *= k;
  const ExtReal sign_m = (m % 2 == 0) ? ExtReal(1) : ExtReal(-1);
  const ComplexPair rhs = ComplexPair(-sign_m * li_half_numeric(m)) -
                          (pow_int(two_pi_i, m) / mfact) * detail::bernoulli_poly(m, arg);

  ComplexPair ref;
  if (m == 2) {
    ref = ComplexPair(c.pi * c.pi / 4, -c.pi * c.ln2);
  } else {
    ref = ComplexPair(7 * c.zeta(3) / 8 + c.pi * c.pi * c.ln2 / 4, -c.pi * c.ln2 * c.ln2 / 2);
  }

  VerificationRecord r;
  r.name = "Li" + std::to_string(m) + "(2) inversion identity (Re,Im)";
  r.computed = rhs.re;
  r.reference = ref.re;
  const ExtReal re_diff = abs(rhs.re - ref.re);
  const ExtReal im_diff = abs(rhs.im - ref.im);
  r.abs_diff = re_diff > im_diff ? re_diff : im_diff;
  r.tolerance = tol_at(8);
  r.pass = r.abs_diff <= r.tolerance;
  return r;
}

/// The classical Li_m(2) values for m in {2,3} as ComplexPair, used by the
/// direct route of the I3 double derivation.
inline ComplexPair li_at_two_reference(int m) {
  const ConstantTable& c = constants();
  if (m == 2) return {c.pi * c.pi / 4, -c.pi * c.ln2};
  if (m == 3) return {7 * c.zeta(3) / 8 + c.pi * c.pi * c.ln2 / 4, -c.pi * c.ln2 * c.ln2 / 2};
  throw std::invalid_argument("li_at_two_reference: m in {2,3} required");
}

}  // namespace polyasym
