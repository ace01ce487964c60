#pragma once

#include "polyasym/precision.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyasym {

/// Truncated univariate power series; coefficients beyond the declared order
/// do not exist. Operations truncate to the smaller operand order.
class PowerSeries {
 public:
  explicit PowerSeries(int order) : c_(static_cast<std::size_t>(order) + 1, ExtReal(0)) {
    if (order < 0) throw std::invalid_argument("PowerSeries: order >= 0 required");
  }
  static PowerSeries from_coeffs(std::vector<ExtReal> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("PowerSeries: at least one coefficient");
    PowerSeries p(static_cast<int>(coeffs.size()) - 1);
    p.c_ = std::move(coeffs);
    return p;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const ExtReal& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  ExtReal& at(int k) { return c_[static_cast<std::size_t>(k)]; }

 private:
  std::vector<ExtReal> c_;
};

inline PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (int k = 0; k <= n; ++k) r.at(k) = a[k] + b[k];
  return r;
}

inline PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (int k = 0; k <= n; ++k) r.at(k) = a[k] - b[k];
  return r;
}

inline PowerSeries ps_scale(const PowerSeries& a, const ExtReal& s) {
  PowerSeries r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.at(k) = a[k] * s;
  return r;
}

inline PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) r.at(i + j) += a[i] * b[j];
  }
  return r;
}

/// Reciprocal through the series order by the division recurrence.
inline PowerSeries ps_recip(const PowerSeries& a) {
  if (a[0] == 0) throw std::domain_error("ps_recip: constant term is zero");
  const int n = a.order();
  PowerSeries r(n);
  r.at(0) = 1 / a[0];
  for (int k = 1; k <= n; ++k) {
    ExtReal s(0);
    for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r.at(k) = -s / a[0];
  }
  return r;
}

/// Formal ln(1 + a) for a series with zero constant term, by the recurrence
/// n b_n = n a_n - sum_{k<n} k b_k a_{n-k}.
inline PowerSeries ps_log1p(const PowerSeries& a) {
  if (a[0] != 0) throw std::domain_error("ps_log1p: constant term must vanish");
  const int n = a.order();
  PowerSeries b(n);
  for (int m = 1; m <= n; ++m) {
    ExtReal s = m * a[m];
    for (int k = 1; k < m; ++k) s -= k * b[k] * a[m - k];
    b.at(m) = s / m;
  }
  return b;
}

/// Formal exp(a) for a series with zero constant term, by n e_n = sum k a_k e_{n-k}.
inline PowerSeries ps_exp(const PowerSeries& a) {
  if (a[0] != 0) throw std::domain_error("ps_exp: constant term must vanish");
  const int n = a.order();
  PowerSeries e(n);
  e.at(0) = 1;
  for (int m = 1; m <= n; ++m) {
    ExtReal s(0);
    for (int k = 1; k <= m; ++k) s += k * a[k] * e[m - k];
    e.at(m) = s / m;
  }
  return e;
}

}  // namespace polyasym
