#pragma once

#include "polyasym/precision.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyasym {

/// Sparse Laurent object in eps with polynomial L-coefficients: terms are
/// c * eps^i * L^j with i >= -1, j >= 0, truncated at eps_order in eps.
/// Also reused as the (w, ln w) carrier of singular expansions.
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (eps degree, L degree)

  explicit BivariatePoly(int eps_order) : eps_order_(eps_order) {}

  int eps_order() const { return eps_order_; }
  const std::map<Key, ExtReal>& terms() const { return terms_; }

  ExtReal coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? ExtReal(0) : it->second;
  }

  void set(int i, int j, const ExtReal& v) {
    check_key(i, j);
    if (i > eps_order_) return;
    if (v == 0) {
      terms_.erase({i, j});
    } else {
      terms_[{i, j}] = v;
    }
  }

  void add_term(int i, int j, const ExtReal& v) {
    check_key(i, j);
    if (i > eps_order_ || v == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  static void check_key(int i, int j) {
    if (i < -1 || j < 0) {
      throw std::domain_error("BivariatePoly: eps degree >= -1 and L degree >= 0 required");
    }
  }

  std::map<Key, ExtReal> terms_;
  int eps_order_;
};

inline BivariatePoly bv_add(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r(std::min(a.eps_order(), b.eps_order()));
  for (const auto& [k, v] : a.terms()) r.add_term(k.first, k.second, v);
  for (const auto& [k, v] : b.terms()) r.add_term(k.first, k.second, v);
  return r;
}

inline BivariatePoly bv_scale(const BivariatePoly& a, const ExtReal& s) {
  BivariatePoly r(a.eps_order());
  for (const auto& [k, v] : a.terms()) r.add_term(k.first, k.second, v * s);
  return r;
}

inline BivariatePoly bv_mul(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r(std::min(a.eps_order(), b.eps_order()));
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      const int i = ka.first + kb.first;
      if (i > r.eps_order()) continue;
      r.add_term(i, ka.second + kb.second, va * vb);
    }
  }
  return r;
}

/// Optional grading bound checked while dividing: max L-degree allowed at a
/// given eps-degree of the result.
using GradingBound = std::function<int(int)>;

/// Reciprocal of a = eps * u where u(0) is an invertible pure number. The
/// result is eps^-1 * u^-1, computed by the graded division recurrence in eps
/// with L treated as an opaque symbol.
inline BivariatePoly bv_recip_graded(const BivariatePoly& a, const GradingBound& bound = {}) {
  for (const auto& [k, v] : a.terms()) {
    if (k.first <= 0) throw std::domain_error("bv_recip_graded: argument must be divisible by eps");
  }
  const int uord = a.eps_order() - 1;  // u carries eps^0 .. eps^uord
  // u_k as L-polynomials
  std::vector<std::map<int, ExtReal>> u(static_cast<std::size_t>(uord) + 1);
  for (const auto& [k, v] : a.terms()) {
    if (k.first - 1 <= uord) u[static_cast<std::size_t>(k.first - 1)][k.second] = v;
  }
  const auto& u0 = u[0];
  if (u0.size() != 1 || u0.count(0) == 0 || u0.at(0) == 0) {
    throw std::domain_error(
        "bv_recip_graded: leading coefficient is not an invertible pure number; "
        "singular expansion order too low");
  }
  const ExtReal lead = u0.at(0);
  std::vector<std::map<int, ExtReal>> v(static_cast<std::size_t>(uord) + 1);
  v[0][0] = 1 / lead;
  for (int n = 1; n <= uord; ++n) {
    std::map<int, ExtReal> acc;
    for (int k = 1; k <= n; ++k) {
      for (const auto& [j1, c1] : u[static_cast<std::size_t>(k)]) {
        for (const auto& [j2, c2] : v[static_cast<std::size_t>(n - k)]) {
          acc[j1 + j2] += c1 * c2;
        }
      }
    }
    for (const auto& [j, c] : acc) {
      const ExtReal coeff = -c / lead;
      if (coeff == 0) continue;
      if (bound && j > bound(n - 1)) {
        throw std::logic_error("bv_recip_graded: grading bound violated during division");
      }
      v[static_cast<std::size_t>(n)][j] = coeff;
    }
  }
  BivariatePoly r(a.eps_order());
  for (int n = 0; n <= uord; ++n) {
    for (const auto& [j, c] : v[static_cast<std::size_t>(n)]) r.add_term(n - 1, j, c);
  }
  return r;
}

}  // namespace polyasym
