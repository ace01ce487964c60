#pragma once

#include "polyasym/precision.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace polyasym {

/// Finite sum of terms c * ln(n)^a / n^b with a >= 0, b >= 0, truncated at
/// b <= max_order. One term per (a, b) pair.
class AsymptoticExpansion {
 public:
  using Key = std::pair<int, int>;  // (log power a, inverse power b)

  explicit AsymptoticExpansion(int max_order) : max_order_(max_order) {
    if (max_order < 0) throw std::invalid_argument("AsymptoticExpansion: max_order >= 0 required");
  }

  int max_order() const { return max_order_; }
  const std::map<Key, ExtReal>& terms() const { return terms_; }

  ExtReal coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? ExtReal(0) : it->second;
  }

  void add_term(int a, int b, const ExtReal& v) {
    if (a < 0 || b < 0) {
      throw std::domain_error("AsymptoticExpansion: log power and inverse power must be >= 0");
    }
    if (b > max_order_ || v == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Smallest inverse power present (max_order + 1 when empty).
  int lowest_inverse_power() const {
    int best = max_order_ + 1;
    for (const auto& [k, v] : terms_) best = std::min(best, k.second);
    return best;
  }

  /// Keeps terms with b <= order.
  AsymptoticExpansion truncated(int order) const {
    AsymptoticExpansion r(order);
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v);
    return r;
  }

  /// Drops coefficients below `floor` (cancellation dust).
  AsymptoticExpansion cleaned(const ExtReal& floor) const {
    AsymptoticExpansion r(max_order_);
    for (const auto& [k, v] : terms_) {
      if (abs(v) > floor) r.add_term(k.first, k.second, v);
    }
    return r;
  }

  ExtReal largest_coeff() const {
    ExtReal best(0);
    for (const auto& [k, v] : terms_) best = std::max(best, abs(v));
    return best;
  }

  ExtReal eval(long n) const {
    const ExtReal nr(static_cast<unsigned long>(n));
    const ExtReal ln = log(nr);
    ExtReal s(0);
    for (const auto& [k, v] : terms_) {
      ExtReal t = v / pow(nr, k.second);
      for (int a = 0; a < k.first; ++a) t *= ln;
      s += t;
    }
    return s;
  }

  friend AsymptoticExpansion operator+(const AsymptoticExpansion& x, const AsymptoticExpansion& y) {
    AsymptoticExpansion r(std::min(x.max_order_, y.max_order_));
    for (const auto& [k, v] : x.terms_) r.add_term(k.first, k.second, v);
    for (const auto& [k, v] : y.terms_) r.add_term(k.first, k.second, v);
    return r;
  }

  friend AsymptoticExpansion operator*(const AsymptoticExpansion& x, const AsymptoticExpansion& y) {
    AsymptoticExpansion r(std::min(x.max_order_, y.max_order_));
    for (const auto& [kx, vx] : x.terms_) {
      for (const auto& [ky, vy] : y.terms_) {
        const int b = kx.second + ky.second;
        if (b > r.max_order_) continue;
        r.add_term(kx.first + ky.first, b, vx * vy);
      }
    }
    return r;
  }

  friend AsymptoticExpansion operator*(const ExtReal& s, const AsymptoticExpansion& x) {
    AsymptoticExpansion r(x.max_order_);
    for (const auto& [k, v] : x.terms_) r.add_term(k.first, k.second, s * v);
    return r;
  }

 private:
  std::map<Key, ExtReal> terms_;
  int max_order_;
};

}  // namespace polyasym
