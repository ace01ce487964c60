#pragma once

#include "polyasym/precision.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace polyasym {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline ExtReal to_real(const BigRational& q) {
  return ExtReal(boost::multiprecision::numerator(q).str()) /
         ExtReal(boost::multiprecision::denominator(q).str());
}

/// Bernoulli number B_n as an exact rational (B_1 = -1/2 convention).
inline const BigRational& bernoulli_rational(int n) {
  static std::vector<BigRational> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (n < 0) throw std::invalid_argument("bernoulli: n >= 0 required");
  if (n > 128) throw std::invalid_argument("bernoulli: index above supported range");
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    if (m == 0) {
      cache.emplace_back(1);
      continue;
    }
    // sum_{j=0}^{m} C(m+1,j) B_j = 0
    BigRational s(0);
    BigInt binom(1);  // C(m+1, j), starting at j = 0
    for (int j = 0; j < m; ++j) {
      s += BigRational(binom) * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    cache.emplace_back(-s / BigRational(m + 1));
  }
  return cache[n];
}

inline ExtReal bernoulli_real(int n) { return to_real(bernoulli_rational(n)); }

/// Generalized harmonic number H_n^(p) = sum_{j=1..n} 1/j^p.
/// Summed in ascending magnitude (j = n down to 1).
inline ExtReal harmonic(long n, int p) {
  if (n < 1 || p < 1) throw std::invalid_argument("harmonic: n >= 1 and p >= 1 required");
  ExtReal s(0);
  for (long j = n; j >= 1; --j) {
    ExtReal jp = ExtReal(static_cast<unsigned long>(j));
    s += 1 / pow(jp, p);
  }
  return s;
}

namespace detail {

/// Cohen-Rodriguez Villegas-Zagier acceleration for sum_{k>=0} (-1)^k a(k),
/// a totally monotone. Error decays like (3+sqrt(8))^(-terms).
template <typename TermFn>
ExtReal cvz_alternating(TermFn a, int terms) {
  ExtReal d = pow(3 + 2 * sqrt(ExtReal(2)), terms);
  d = (d + 1 / d) / 2;
  ExtReal b(-1), c(-d), s(0);
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    s += c * a(k);
    b *= ExtReal((k + terms)) * (k - terms) / ((ExtReal(k) + ExtReal(1) / 2) * (k + 1));
  }
  return s / d;
}

inline int cvz_terms_for(int digits) {
  // (3+sqrt 8)^-n < 10^-(digits+6)
  return static_cast<int>((digits + 6) * 1.31) + 4;
}

}  // namespace detail

/// Dirichlet eta(s) = sum (-1)^(k-1)/k^s by CVZ-accelerated summation, s >= 1.
inline ExtReal eta_accelerated(int s) {
  if (s < 1) throw std::invalid_argument("eta_accelerated: s >= 1 required");
  const int n = detail::cvz_terms_for(internal_digits());
  auto term = [s](int k) { return 1 / pow(ExtReal(static_cast<unsigned>(k + 1)), s); };
  return detail::cvz_alternating(term, n);
}

/// zeta(s) for integer s >= 2, from the accelerated eta series divided by
/// (1 - 2^(1-s)). Two term budgets are compared; disagreement means the
/// budget is insufficient for the configured precision.
inline ExtReal zeta_hi(int s) {
  if (s < 2) throw std::invalid_argument("zeta_hi: s >= 2 required");
  const int n = detail::cvz_terms_for(internal_digits());
  auto term = [s](int k) { return 1 / pow(ExtReal(static_cast<unsigned>(k + 1)), s); };
  const ExtReal e1 = detail::cvz_alternating(term, n);
  const ExtReal e2 = detail::cvz_alternating(term, n + 10);
  if (abs(e1 - e2) > pow10(-(internal_digits() - 2))) {
    throw std::runtime_error("zeta_hi: acceleration did not stabilize; increase term budget");
  }
  const ExtReal scale = 1 - pow(ExtReal(2), 1 - s);
  return e2 / scale;
}

/// eta(s) by the globally convergent binomial (Euler-transform) double sum.
/// Inner sums are exact rationals, so this route is independent of the
/// accelerated one and free of cancellation.
inline ExtReal eta_binomial(int s) {
  if (s < 1) throw std::invalid_argument("eta_binomial: s >= 1 required");
  const int N = static_cast<int>((internal_digits() + 4) * 3.33) + 8;
  ExtReal total(0);
  ExtReal half_pow(ExtReal(1) / 2);  // 2^-(n+1)
  for (int n = 0; n <= N; ++n) {
    BigRational inner(0);
    BigInt binom(1);
    for (int k = 0; k <= n; ++k) {
      BigInt denom = boost::multiprecision::pow(BigInt(k + 1), static_cast<unsigned>(s));
      BigRational t = BigRational(binom) / BigRational(denom);
      inner += (k % 2 == 0) ? t : -t;
      binom = binom * (n - k) / (k + 1);
    }
    total += half_pow * to_real(inner);
    half_pow /= 2;
  }
  return total;
}

namespace detail {

/// Euler-Mascheroni constant by the Euler-Maclaurin expansion of H_N - ln N
/// at N = 10^4, with Bernoulli corrections carried until they fall below the
/// internal precision.
inline ExtReal gamma_euler_maclaurin() {
  const long N = 10000;
  ExtReal HN(0);
  for (long j = N; j >= 1; --j) HN += ExtReal(1) / static_cast<unsigned long>(j);
  ExtReal Nr(static_cast<unsigned long>(N));
  ExtReal acc = HN - log(Nr) - 1 / (2 * Nr);
  const ExtReal floor = pow10(-(internal_digits() + 4));
  for (int k = 1; k <= 32; ++k) {
    const ExtReal term = bernoulli_real(2 * k) / (2 * k * pow(Nr, 2 * k));
    acc += term;
    if (abs(term) < floor) break;
  }
  return acc;
}

/// zeta at integers s <= 0 via Bernoulli numbers; trivial zeros included.
inline ExtReal zeta_nonpositive(int s) {
  if (s > 0) throw std::invalid_argument("zeta_nonpositive: s <= 0 required");
  if (s == 0) return ExtReal(-1) / 2;
  const int n = -s;
  if (n % 2 == 0) return ExtReal(0);
  return -bernoulli_real(n + 1) / (n + 1);
}

}  // namespace detail

/// All shared constants at the working precision. Built once per precision;
/// immutable afterwards.
class ConstantTable {
 public:
  ExtReal pi;
  ExtReal gamma;
  ExtReal ln2;

  static constexpr int kZetaMin = -9;
  static constexpr int kZetaMax = 9;

  /// zeta(s) for integer s in [-9, 9], s != 1.
  const ExtReal& zeta(int s) const {
    if (s < kZetaMin || s > kZetaMax || s == 1) {
      throw std::invalid_argument("ConstantTable::zeta: s in [-9,9], s != 1 required");
    }
    return zeta_[static_cast<std::size_t>(s - kZetaMin)];
  }

  /// eta(s) for s >= 1 (eta(1) = ln 2).
  ExtReal eta(int s) const {
    if (s < 1) throw std::invalid_argument("ConstantTable::eta: s >= 1 required");
    if (s == 1) return ln2;
    if (s <= kZetaMax) return (1 - pow(ExtReal(2), 1 - s)) * zeta(s);
    return (1 - pow(ExtReal(2), 1 - s)) * zeta_hi(s);
  }

  /// Li_m(1/2) for m in 2..6, by direct geometric-tail summation.
  const ExtReal& li_half(int m) const {
    if (m < 2 || m > 6) throw std::invalid_argument("ConstantTable::li_half: m in 2..6 required");
    return li_half_[static_cast<std::size_t>(m - 2)];
  }

  ConstantTable() {
    ensure_thread_precision();
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    mpfr_const_log2(ln2.backend().data(), MPFR_RNDN);
    gamma = detail::gamma_euler_maclaurin();
    for (int s = kZetaMin; s <= kZetaMax; ++s) {
      if (s == 1) {
        zeta_.emplace_back(0);
      } else if (s < 1) {
        zeta_.push_back(detail::zeta_nonpositive(s));
      } else {
        zeta_.push_back(zeta_hi(s));
      }
    }
    for (int m = 2; m <= 6; ++m) li_half_.push_back(li_half_series(m));
    self_check();
  }

  ConstantTable(const ConstantTable&) = delete;
  ConstantTable& operator=(const ConstantTable&) = delete;

 private:
  std::vector<ExtReal> zeta_;
  std::vector<ExtReal> li_half_;

  static ExtReal li_half_series(int m) {
    ExtReal s(0), p(1);
    const ExtReal floor = pow10(-(internal_digits() + 4));
    for (int k = 1; k < 4000; ++k) {
      p /= 2;
      const ExtReal term = p / pow(ExtReal(static_cast<unsigned>(k)), m);
      s += term;
      if (term < floor) break;
    }
    return s;
  }

  void self_check() const {
    const ExtReal tol = tol_at(2);
    auto require = [&](const ExtReal& a, const ExtReal& b, const char* what) {
      if (abs(a - b) > tol) {
        throw std::logic_error(std::string("ConstantTable self-check failed: ") + what);
      }
    };
    require(zeta(2), pi * pi / 6, "zeta(2) = pi^2/6");
    require(zeta(4), pow(pi, 4) / 90, "zeta(4) = pi^4/90");
    require(zeta(0), ExtReal(-1) / 2, "zeta(0) = -1/2");
    require(zeta(-1), ExtReal(-1) / 12, "zeta(-1) = -1/12");
    require(zeta(-2), ExtReal(0), "zeta(-2) = 0");
    require(li_half(2), pi * pi / 12 - ln2 * ln2 / 2, "Li2(1/2)");
    require(li_half(3), 7 * zeta(3) / 8 - pi * pi * ln2 / 12 + pow(ln2, 3) / 6, "Li3(1/2)");
  }
};

/// The shared table for the current working precision. Entries are kept per
/// precision so references stay valid if the precision is reconfigured.
inline const ConstantTable& constants() {
  static std::map<int, std::unique_ptr<const ConstantTable>> tables;
  static std::mutex mu;
  ensure_thread_precision();
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[internal_digits()];
  if (!slot) slot = std::make_unique<const ConstantTable>();
  return *slot;
}

/// zeta(s) for any integer s >= 2, table-backed where possible.
inline ExtReal zeta_of(int s) {
  if (s < 2) throw std::invalid_argument("zeta_of: s >= 2 required");
  if (s <= ConstantTable::kZetaMax) return constants().zeta(s);
  return zeta_hi(s);
}

namespace detail {

/// zeta at any integer s <= 9 (s != 1); extends the table's negative range
/// for the deep singular expansions used near z = 1.
inline ExtReal zeta_extended(int s) {
  if (s == 1) throw std::invalid_argument("zeta_extended: s = 1 is a pole");
  if (s > ConstantTable::kZetaMax) return zeta_hi(s);
  if (s >= ConstantTable::kZetaMin) return constants().zeta(s);
  return zeta_nonpositive(s);
}

}  // namespace detail

/// Polygamma at positive integers, k in {0,1,2}:
///   psi(n) = H_{n-1} - gamma, psi'(n) = pi^2/6 - H^(2)_{n-1},
///   psi''(n) = -2 zeta(3) + 2 H^(3)_{n-1}.
inline ExtReal polygamma_int(int k, long n) {
  if (n < 1) throw std::invalid_argument("polygamma_int: n >= 1 required");
  const ConstantTable& c = constants();
  auto hm1 = [&](int p) { return n == 1 ? ExtReal(0) : harmonic(n - 1, p); };
  switch (k) {
    case 0:
      return hm1(1) - c.gamma;
    case 1:
      return c.pi * c.pi / 6 - hm1(2);
    case 2:
      return -2 * c.zeta(3) + 2 * hm1(3);
    default:
      throw std::invalid_argument("polygamma_int: k in {0,1,2} required");
  }
}

}  // namespace polyasym
