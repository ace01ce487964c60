#pragma once

#include "polyasym/constants.hpp"
#include "polyasym/polylog.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyasym {

enum class EulerSumKind { linear, quadratic };

struct OracleResult {
  ExtReal value;      // averaged estimate
  ExtReal stability;  // difference between the folds ending at N and N-2
  long terms = 0;
};

namespace detail {

inline ExtReal euler_sum_memo(const std::string& key, const std::function<ExtReal()>& compute) {
  static std::map<std::pair<int, std::string>, ExtReal> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto full_key = std::make_pair(internal_digits(), key);
  auto it = cache.find(full_key);
  if (it == cache.end()) it = cache.emplace(full_key, compute()).first;
  return it->second;
}

// zeta-bar(s) = (1 - 2^(1-s)) zeta(s); zeta-bar(1) = ln 2, and the s = 0
// limit convention is 1/2.
inline ExtReal zeta_bar(int s) {
  if (s == 0) return ExtReal(1) / 2;
  return constants().eta(s);
}

inline ExtReal binom_real(int n, int k) {
  BigInt b(1);
  for (int j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
  return to_real(BigRational(b));
}

}  // namespace detail

/// Linear sum S^{+-}_{1,q} for even q:
///   2 S = (q+1) zb(q+1) - zeta(q+1) - 2 sum_{k=1}^{q/2-1} zb(2k) zeta(q+1-2k).
inline ExtReal s_pm_linear(int q) {
  if (q < 2 || q % 2 != 0) throw std::invalid_argument("s_pm_linear: even q >= 2 required");
  return detail::euler_sum_memo("linear:" + std::to_string(q), [q] {
    ExtReal s = (q + 1) * detail::zeta_bar(q + 1) - zeta_of(q + 1);
    for (int k = 1; k <= q / 2 - 1; ++k) {
      s -= 2 * detail::zeta_bar(2 * k) * zeta_of(q + 1 - 2 * k);
    }
    return s / 2;
  });
}

/// General alternating linear sum S^{+-}_{p,q} for p, q >= 2 with p + q odd.
inline ExtReal s_pm_general(int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("s_pm_general: p, q >= 2 required");
  if ((p + q) % 2 == 0) throw std::invalid_argument("s_pm_general: p + q must be odd");
  return detail::euler_sum_memo("general:" + std::to_string(p) + "," + std::to_string(q), [p, q] {
    ExtReal s = (1 - ((p % 2 == 0) ? ExtReal(1) : ExtReal(-1))) * zeta_of(p) * detail::zeta_bar(q);
    s += detail::zeta_bar(p + q);
    for (int k = 0; k <= p / 2; ++k) {
      const ExtReal sign = ((p - 2 * k + 1) % 2 == 0) ? ExtReal(1) : ExtReal(-1);
      s += 2 * detail::binom_real(q + p - 2 * k - 1, q - 1) * sign *
           detail::zeta_bar(q + p - 2 * k) * detail::zeta_bar(2 * k);
    }
    const ExtReal sign_p = (p % 2 == 0) ? ExtReal(1) : ExtReal(-1);
    for (int k = 0; k <= q / 2; ++k) {
      s += 2 * sign_p * detail::binom_real(p + q - 2 * k - 1, p - 1) * zeta_of(p + q - 2 * k) *
           detail::zeta_bar(2 * k);
    }
    return s / 2;
  });
}

/// S^{+-}_{1,3}, the weight-4 constant mu_1:
///   -2 Li_4(1/2) + 11 zeta(4)/4 + zeta(2) ln^2 2 / 2 - ln^4 2 / 12 - 7 zeta(3) ln 2 / 4.
inline ExtReal s13_mu1() {
  return detail::euler_sum_memo("s13_mu1", [] {
    const ConstantTable& c = constants();
    return -2 * li_half_numeric(4) + 11 * c.zeta(4) / 4 + c.zeta(2) * c.ln2 * c.ln2 / 2 -
           pow(c.ln2, 4) / 12 - 7 * c.zeta(3) * c.ln2 / 4;
  });
}

/// T_3 = sum_{k>=1} (-1)^k H_k^2 / k^3, in weight-5 constants.
inline ExtReal t3_quadratic() {
  return detail::euler_sum_memo("t3", [] {
    const ConstantTable& c = constants();
    return -(4 * li_half_numeric(5) + 4 * c.ln2 * li_half_numeric(4) + 2 * pow(c.ln2, 5) / 15 +
             7 * c.zeta(3) * c.ln2 * c.ln2 / 4 - 19 * c.zeta(5) / 32 -
             2 * c.zeta(2) * pow(c.ln2, 3) / 3 - 11 * c.zeta(2) * c.zeta(3) / 8);
  });
}

/// Averaged tail (iterated pairwise averaging, a truncated Euler transform)
/// of the alternating series sum_{k>=1} (-1)^(k-1) a(k). The last levels+1
/// partial sums are folded; stability reports the drift against the fold
/// ending two terms earlier.
template <typename TermFn>
OracleResult alternating_sum_oracle(TermFn a, long N, int levels = 6) {
  if (N < levels + 3) throw std::invalid_argument("alternating_sum_oracle: N too small");
  ensure_thread_precision();
  ExtReal s(0);
  std::vector<ExtReal> window;  // partial sums s_{N-levels-2} .. s_N
  const long keep_from = N - levels - 2;
  for (long k = 1; k <= N; ++k) {
    const ExtReal term = a(k);
    s += (k % 2 == 1) ? term : -term;
    if (k >= keep_from) window.push_back(s);
  }
  auto fold = [](std::vector<ExtReal> v) {
    while (v.size() > 1) {
      for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = (v[i] + v[i + 1]) / 2;
      v.pop_back();
    }
    return v[0];
  };
  std::vector<ExtReal> at_n(window.end() - (levels + 1), window.end());
  std::vector<ExtReal> at_n_minus_2(window.end() - (levels + 3), window.end() - 2);
  OracleResult r;
  r.value = fold(at_n);
  r.stability = abs(r.value - fold(at_n_minus_2));
  r.terms = N;
  return r;
}

/// Brute-force oracle for the alternating Euler sums: linear terms
/// H^(p)_k / k^q, quadratic terms H_k^2 / k^q (p = 1 harmonics).
inline OracleResult s_pm_direct(int p, int q, EulerSumKind kind, long N, int levels = 6) {
  if (p < 1 || q < 1) throw std::invalid_argument("s_pm_direct: p, q >= 1 required");
  if (N < 1000) throw std::invalid_argument("s_pm_direct: N >= 1000 required");
  ExtReal H(0);
  auto term = [&, p, q, kind](long k) {
    const ExtReal kr(static_cast<unsigned long>(k));
    H += 1 / pow(kr, p);
    const ExtReal numer = (kind == EulerSumKind::quadratic) ? H * H : H;
    return numer / pow(kr, q);
  };
  return alternating_sum_oracle(term, N, levels);
}

}  // namespace polyasym
