#pragma once

#include "polyasym/asymptotic_expansion.hpp"
#include "polyasym/bivariate.hpp"
#include "polyasym/constants.hpp"
#include "polyasym/polylog.hpp"
#include "polyasym/power_series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyasym {

/// Taylor coefficients S_n = [z^n] zeta(m)/(zeta(m) - Li_m(z)) for n = 0..n_max,
/// by exact series division.
inline std::vector<ExtReal> exact_Sn(int m, int n_max) {
  if (m < 2) throw std::invalid_argument("exact_Sn: m >= 2 required");
  if (n_max < 1) throw std::invalid_argument("exact_Sn: n_max >= 1 required");
  ensure_thread_precision();
  const ExtReal zm = zeta_of(m);
  PowerSeries den(n_max);
  den.at(0) = zm;
  for (int k = 1; k <= n_max; ++k) den.at(k) = -1 / pow(ExtReal(static_cast<unsigned>(k)), m);
  const PowerSeries inv = ps_recip(den);
  std::vector<ExtReal> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) out.push_back(zm * inv[k]);
  return out;
}

namespace detail {

/// Unsigned Stirling numbers of the first kind c(n, k) for k <= k_max, exact.
/// Row recurrence c(n+1, k) = c(n, k-1) + n c(n, k).
inline std::vector<BigInt> stirling_first_row(long n, int k_max) {
  std::vector<BigInt> row(static_cast<std::size_t>(k_max) + 1, BigInt(0));
  row[0] = 1;  // c(0,0)
  for (long m = 0; m < n; ++m) {
    for (int k = k_max; k >= 1; --k) row[static_cast<std::size_t>(k)] =
        row[static_cast<std::size_t>(k - 1)] + m * row[static_cast<std::size_t>(k)];
    row[0] = row[0] * m;  // c(m+1, 0) = 0 for m+1 >= 1
  }
  return row;
}

inline const PowerSeries& log_series_power(int k, int order) {
  static std::map<std::pair<std::pair<int, int>, int>, PowerSeries> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(std::make_pair(internal_digits(), k), order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  PowerSeries L(order);
  for (int j = 1; j <= order; ++j) L.at(j) = ExtReal(1) / static_cast<unsigned>(j);
  PowerSeries p = L;
  for (int t = 1; t < k; ++t) p = ps_mul(p, L);
  return cache.emplace(key, std::move(p)).first->second;
}

}  // namespace detail

/// L_{k,n} = [z^n] ln(1/(1-z))^k, computed along two independent routes
/// (series power and the exact Stirling recurrence) which must agree at the
/// working precision; disagreement is a hard internal failure.
inline ExtReal exact_Lkn(int k, long n) {
  if (k < 1) throw std::invalid_argument("exact_Lkn: k >= 1 required");
  if (n < 0) throw std::invalid_argument("exact_Lkn: n >= 0 required");
  ensure_thread_precision();
  if (n == 0) return ExtReal(0);
  // Exact route: k! c(n,k) / n!.
  const auto row = detail::stirling_first_row(n, k);
  BigInt kfact(1);
  for (int j = 2; j <= k; ++j) kfact *= j;
  BigInt nfact(1);
  for (long j = 2; j <= n; ++j) nfact *= j;
  const ExtReal exact = to_real(BigRational(kfact * row[static_cast<std::size_t>(k)], nfact));
  // Series route.
  if (n <= 400) {
    const PowerSeries& p = detail::log_series_power(k, 400);
    const ExtReal series = p[static_cast<int>(n)];
    const ExtReal scale = std::max(ExtReal(1), abs(exact));
    if (abs(series - exact) > tol_at(8) * scale) {
      throw std::logic_error("exact_Lkn: series and Stirling routes disagree");
    }
  }
  return exact;
}

namespace detail {

/// Expansion of the generalized harmonic number H^(p)_{n-1} in n. For p = 1,
/// ln n + gamma - 1/(2n) - sum B_{2j}/(2j n^{2j}); for p >= 2, zeta(p) minus
/// the Euler-Maclaurin tail n^(1-p)/(p-1) + n^-p/2 + sum B_{2j}/(2j)! (p)_{2j-1} n^(1-p-2j).
inline AsymptoticExpansion harmonic_power_expansion(int p, int max_order) {
  AsymptoticExpansion h(max_order);
  if (p == 1) {
    h.add_term(1, 0, ExtReal(1));
    h.add_term(0, 0, constants().gamma);
    h.add_term(0, 1, ExtReal(-1) / 2);
    for (int j = 1; 2 * j <= max_order; ++j) h.add_term(0, 2 * j, -bernoulli_real(2 * j) / (2 * j));
    return h;
  }
  h.add_term(0, 0, zeta_of(p));
  h.add_term(0, p - 1, ExtReal(-1) / (p - 1));
  h.add_term(0, p, ExtReal(-1) / 2);
  ExtReal fact2j(1);  // (2j)!
  for (int j = 1; p + 2 * j - 1 <= max_order; ++j) {
    fact2j *= (2 * j - 1) * (2 * j);
    ExtReal rising(1);  // (p)_{2j-1}
    for (int t = 0; t < 2 * j - 1; ++t) rising *= p + t;
    h.add_term(0, p + 2 * j - 1, -bernoulli_real(2 * j) / fact2j * rising);
  }
  return h;
}

}  // namespace detail

/// Asymptotic expansion of L_{k,n} = [z^n] ln(1/(1-z))^k for k in 1..5,
/// derived from the exact harmonic-number form L_{k,n} = (k!/n) e_{k-1},
/// where e_j are the elementary symmetric functions of {1, 1/2, .., 1/(n-1)}
/// built from the power sums H^(r)_{n-1} by Newton's identities.
inline AsymptoticExpansion asym_Lkn(int k, int max_order) {
  if (max_order < 1) throw std::invalid_argument("asym_Lkn: max_order >= 1 required");
  if (k < 1 || k > 5) throw std::invalid_argument("asym_Lkn: k in 1..5 required");
  ensure_thread_precision();
  std::vector<AsymptoticExpansion> p;  // power sums, 1-based
  p.emplace_back(max_order);           // unused slot 0
  for (int r = 1; r < k; ++r) p.push_back(detail::harmonic_power_expansion(r, max_order));
  std::vector<AsymptoticExpansion> e;
  e.emplace_back(max_order);
  e[0].add_term(0, 0, ExtReal(1));
  for (int j = 1; j < k; ++j) {
    AsymptoticExpansion acc(max_order);
    for (int r = 1; r <= j; ++r) {
      const ExtReal sign = (r % 2 == 1) ? ExtReal(1) : ExtReal(-1);
      acc = acc + sign * (p[static_cast<std::size_t>(r)] * e[static_cast<std::size_t>(j - r)]);
    }
    e.push_back((ExtReal(1) / j) * acc);
  }
  ExtReal kfact(1);
  for (int j = 2; j <= k; ++j) kfact *= j;
  AsymptoticExpansion inv_n(max_order);
  inv_n.add_term(0, 1, ExtReal(1));
  return (kfact * e[static_cast<std::size_t>(k - 1)]) * inv_n;
}

namespace detail {

/// Re-expansion of an expansion in n around n for argument n - t:
/// ln(n-t) = ln n + ln(1 - t/n) and (n-t)^-b = n^-b (1 - t/n)^-b, both
/// expanded exactly through the retained order.
inline AsymptoticExpansion shift_expansion(const AsymptoticExpansion& e, long t) {
  if (t == 0) return e;
  const int max_order = e.max_order();
  const ExtReal tr(static_cast<unsigned long>(t));
  AsymptoticExpansion delta(max_order);  // ln(1 - t/n)
  for (int s = 1; s <= max_order; ++s) delta.add_term(0, s, -pow(tr, s) / s);
  AsymptoticExpansion ln_shifted(max_order);  // ln n + delta
  ln_shifted.add_term(1, 0, ExtReal(1));
  ln_shifted = ln_shifted + delta;

  AsymptoticExpansion out(max_order);
  for (const auto& [key, v] : e.terms()) {
    const auto [a, b] = key;
    AsymptoticExpansion term(max_order);
    term.add_term(0, 0, v);
    for (int p = 0; p < a; ++p) term = term * ln_shifted;
    AsymptoticExpansion geo(max_order);  // n^-b (1-t/n)^-b
    BigInt binom(1);
    for (int s = 0; b + s <= max_order; ++s) {
      if (s > 0) binom = binom * (b - 1 + s) / s;
      geo.add_term(0, b + s, to_real(BigRational(binom)) * pow(tr, s));
    }
    out = out + term * geo;
  }
  return out;
}

}  // namespace detail

/// G_{i,j,n} = [z^n] (1-z)^i L^j = sum_t C(i,t) (-1)^t L_{j,n-t}, with every
/// shifted term re-expanded around n and truncated at max_order.
inline AsymptoticExpansion compute_G(int i, int j, int max_order) {
  if (i < 0 || j < 1 || j > 5) {
    throw std::invalid_argument("compute_G: i >= 0 and j in 1..5 required");
  }
  const AsymptoticExpansion L = asym_Lkn(j, max_order);
  AsymptoticExpansion g(max_order);
  BigInt binom(1);
  for (int t = 0; t <= i; ++t) {
    ExtReal c = to_real(BigRational(binom));
    if (t % 2 == 1) c = -c;
    g = g + c * detail::shift_expansion(L, t);
    binom = binom * (i - t) / (t + 1);
  }
  // The orders below 1/n^(i+1) cancel exactly; sweep the roundoff left behind.
  return g.cleaned(g.largest_coeff() * pow10(-(internal_digits() - 12)));
}

/// Machine derivation of the coefficients D_{i,j} = [eps^i L^j] of the
/// expansion of zeta(m)/(zeta(m) - Li_m(1-eps)): builds w = -ln(1-eps) and
/// ln w = -L + series, substitutes them into the singular expansion of Li_m,
/// and divides by the graded recurrence. Returns D for -1 <= i <= eps_order-2.
inline std::map<std::pair<int, int>, ExtReal> derive_D(int m, int eps_order) {
  if (m < 3) throw std::invalid_argument("derive_D: m >= 3 required");
  if (eps_order < 3) throw std::invalid_argument("derive_D: eps_order >= 3 required");
  ensure_thread_precision();

  // Pure-eps series as one-variable helpers.
  PowerSeries w(eps_order);
  for (int k = 1; k <= eps_order; ++k) w.at(k) = ExtReal(1) / static_cast<unsigned>(k);
  PowerSeries w_over_eps_minus_1(eps_order);
  for (int k = 1; k <= eps_order; ++k) {
    w_over_eps_minus_1.at(k) = ExtReal(1) / static_cast<unsigned>(k + 1);
  }
  const PowerSeries ln_w_over_eps = ps_log1p(w_over_eps_minus_1);

  auto to_bv = [eps_order](const PowerSeries& p) {
    BivariatePoly b(eps_order);
    for (int k = 0; k <= p.order(); ++k) b.add_term(k, 0, p[k]);
    return b;
  };

  const BivariatePoly w_bv = to_bv(w);
  BivariatePoly ln_w(eps_order);  // -L + ln(w/eps)
  ln_w.add_term(0, 1, ExtReal(-1));
  ln_w = bv_add(ln_w, to_bv(ln_w_over_eps));

  // Li_m(1-eps) via the singular expansion in w, truncated at w^eps_order.
  const SingularExpansion sing = li_singular_expansion(m, eps_order);
  BivariatePoly li(eps_order);
  std::vector<BivariatePoly> w_pow;
  w_pow.push_back(to_bv(PowerSeries::from_coeffs({ExtReal(1)})));
  {
    BivariatePoly acc = w_pow[0];
    for (int k = 1; k <= eps_order; ++k) {
      acc = bv_mul(acc, w_bv);
      w_pow.push_back(acc);
    }
  }
  for (const auto& [key, v] : sing.terms.terms()) {
    const auto [wdeg, ldeg] = key;
    BivariatePoly term = bv_scale(w_pow[static_cast<std::size_t>(wdeg)], v);
    for (int p = 0; p < ldeg; ++p) term = bv_mul(term, ln_w);
    li = bv_add(li, term);
  }

  // denominator zeta(m) - Li_m = eps * u; reciprocal with the structural
  // grading bound asserted during division: the log first enters u at
  // eps-index m-2, so the L-degree at result index i is at most
  // floor((i+1)/(m-2)).
  BivariatePoly den(eps_order);
  den.add_term(0, 0, zeta_of(m));
  den = bv_add(den, bv_scale(li, ExtReal(-1)));
  const ExtReal tiny = pow10(-(internal_digits() - 6));
  BivariatePoly den_clean(eps_order);
  for (const auto& [key, v] : den.terms()) {
    if (abs(v) > tiny) den_clean.add_term(key.first, key.second, v);
  }
  GradingBound bound = [m](int i) { return (i + 1) / (m - 2); };
  const BivariatePoly recip = bv_recip_graded(den_clean, bound);

  std::map<std::pair<int, int>, ExtReal> D;
  const ExtReal zm = zeta_of(m);
  for (const auto& [key, v] : recip.terms()) {
    if (key.first > eps_order - 2) continue;
    const ExtReal d = zm * v;
    if (abs(d) > tiny) D[{key.first, key.second}] = d;
  }
  return D;
}

/// Lookup with default 0 (entries that vanish are not stored).
inline ExtReal d_coeff(const std::map<std::pair<int, int>, ExtReal>& D, int i, int j) {
  auto it = D.find({i, j});
  return it == D.end() ? ExtReal(0) : it->second;
}

/// Full pipeline output for one weight m.
struct CoeffPipelineResult {
  int m = 0;
  std::map<std::pair<int, int>, ExtReal> D;
  std::map<std::pair<int, int>, AsymptoticExpansion> G;
  AsymptoticExpansion T{0};
  std::vector<AsymptoticExpansion> C;  // C[k] = truncation at 1/n^k, k = 0..max_order
};

/// Assembles the asymptotics T_n = D_{-1,0} + sum D_{i,j} G_{i,j,n} and the
/// truncations C_{n,k}. Orders above 3 are computed but not anchored to
/// printed values (the CLI marks them accordingly).
inline CoeffPipelineResult asym_Sn(int m, int max_order) {
  if (max_order < 1) throw std::invalid_argument("asym_Sn: max_order >= 1 required");
  const int eps_order = std::max(max_order + 1, 6);
  CoeffPipelineResult r;
  r.m = m;
  r.D = derive_D(m, eps_order);
  r.T = AsymptoticExpansion(max_order);
  const ExtReal tiny = pow10(-(internal_digits() - 8));
  for (const auto& [key, d] : r.D) {
    const auto [i, j] = key;
    if (i == -1) {
      if (j == 0) {
        AsymptoticExpansion c0(max_order);
        c0.add_term(0, 0, d);
        r.T = r.T + c0;
      } else if (abs(d) > tiny) {
        throw std::logic_error("asym_Sn: unexpected log term on the polar part");
      }
      continue;
    }
    if (j == 0) continue;                 // [z^n](1-z)^i vanishes for n > i
    if (i >= max_order) continue;         // G_{i,j} starts at 1/n^(i+1)
    if (j > 5) throw std::logic_error("asym_Sn: transfer beyond L^5 not supported");
    auto g = compute_G(i, j, max_order);
    r.T = r.T + d * g;
    r.G.emplace(key, std::move(g));
  }
  r.C.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int k = 0; k <= max_order; ++k) r.C.push_back(r.T.truncated(k));
  return r;
}

/// Comparison rows: exact S_n against the truncations C_{n,k}.
struct CompareRow {
  long n = 0;
  ExtReal exact;
  std::vector<ExtReal> c;          // C_{n,k}(n), k = 0..k_max
  std::vector<ExtReal> residual;   // exact - C_{n,k}(n)
};

inline std::vector<CompareRow> compare_table(int m, const std::vector<long>& n_values, int k_max) {
  long n_top = 1;
  for (long n : n_values) n_top = std::max(n_top, n);
  const auto exact = exact_Sn(m, static_cast<int>(n_top));
  const auto pipeline = asym_Sn(m, std::max(k_max, 3));
  std::vector<CompareRow> rows;
  for (long n : n_values) {
    CompareRow row;
    row.n = n;
    row.exact = exact[static_cast<std::size_t>(n)];
    for (int k = 0; k <= k_max; ++k) {
      row.c.push_back(pipeline.C[static_cast<std::size_t>(k)].eval(n));
      row.residual.push_back(row.exact - row.c.back());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace polyasym
