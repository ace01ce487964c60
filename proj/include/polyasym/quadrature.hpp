#pragma once

#include "polyasym/constants.hpp"
#include "polyasym/precision.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace polyasym {

struct QuadResult {
  ExtReal value;
  ExtReal error_estimate;  // difference between the last two refinement levels
  long evaluations = 0;
};

class QuadratureNonConvergence : public std::runtime_error {
 public:
  QuadratureNonConvergence(QuadResult best, int levels)
      : std::runtime_error("quadrature did not converge within the level cap"),
        best_estimate(std::move(best)),
        levels_used(levels) {}
  QuadResult best_estimate;
  int levels_used;
};

namespace detail {

/// tanh-sinh abscissa/weight tables, shared per precision. Level l holds the
/// new points of the trapezoid refinement with step 2^-l; nodes are stored as
/// the distance delta to the nearer interval endpoint, which keeps endpoint
/// behaviour accurate.
class TanhSinhNodes {
 public:
  struct Node {
    ExtReal delta;   // 1 - |x| = 2 / (1 + exp(2u)), u = (pi/2) sinh t
    ExtReal weight;  // (pi/2) cosh t / cosh^2 u
  };

  static constexpr int kMaxLevel = 12;

  static const TanhSinhNodes& instance() {
    static std::map<int, std::unique_ptr<const TanhSinhNodes>> cache;
    static std::mutex mu;
    ensure_thread_precision();
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[internal_digits()];
    if (!slot) slot = std::unique_ptr<const TanhSinhNodes>(new TanhSinhNodes());
    return *slot;
  }

  ExtReal center_weight;                  // weight at t = 0 (x = 0, delta = 1)
  std::vector<std::vector<Node>> levels;  // positive-t nodes per level

 private:
  TanhSinhNodes() {
    const ConstantTable& c = constants();
    const ExtReal half_pi = c.pi / 2;
    // Truncate where exp(-(pi/2) e^t) contributions drop below the target.
    const ExtReal reach = ExtReal(internal_digits() + 12) * log(ExtReal(10)) / half_pi;
    const ExtReal t_max = asinh(reach);
    center_weight = half_pi;
    levels.resize(kMaxLevel + 1);
    for (int level = 0; level <= kMaxLevel; ++level) {
      const ExtReal h = pow(ExtReal(2), -level);
      const int step = (level == 0) ? 1 : 2;  // level 0: all k; else odd k only
      for (int k = 1;; k += step) {
        const ExtReal t = k * h;
        if (t > t_max) break;
        const ExtReal u = half_pi * sinh(t);
        Node node;
        node.delta = 2 / (1 + exp(2 * u));
        const ExtReal ch = cosh(u);
        node.weight = half_pi * cosh(t) / (ch * ch);
        levels[static_cast<std::size_t>(level)].push_back(std::move(node));
      }
    }
  }
};

}  // namespace detail

/// Double-exponential quadrature of f over [a, b]. Refines the trapezoid step
/// until two successive levels differ by at most tol (absolute); throws
/// QuadratureNonConvergence (carrying the best estimate) at the level cap.
template <typename F>
QuadResult integrate_finite(F&& f, const ExtReal& a, const ExtReal& b, const ExtReal& tol,
                            int max_levels = detail::TanhSinhNodes::kMaxLevel) {
  ensure_thread_precision();
  if (!(b > a)) throw std::invalid_argument("integrate_finite: b > a required");
  if (tol < pow10(5 - working_digits())) {
    throw std::invalid_argument("integrate_finite: tolerance below 10^(5-P)");
  }
  if (max_levels < 1 || max_levels > detail::TanhSinhNodes::kMaxLevel) {
    throw std::invalid_argument("integrate_finite: level cap out of range");
  }
  const auto& tables = detail::TanhSinhNodes::instance();
  const ExtReal half_width = (b - a) / 2;
  const ExtReal center = (a + b) / 2;
  long evals = 0;

  auto sample = [&](const detail::TanhSinhNodes::Node& node) {
    const ExtReal off = node.delta * half_width;
    evals += 2;
    return node.weight * (f(a + off) + f(b - off));
  };

  ExtReal sum = tables.center_weight * f(center);
  evals += 1;
  ExtReal prev(0), last_diff(0);
  bool have_prev = false;
  for (int level = 0; level <= max_levels; ++level) {
    for (const auto& node : tables.levels[static_cast<std::size_t>(level)]) sum += sample(node);
    const ExtReal h = pow(ExtReal(2), -level);
    const ExtReal estimate = sum * h * half_width;
    if (have_prev) {
      last_diff = abs(estimate - prev);
      if (last_diff <= tol) {
        return {estimate, last_diff, evals};
      }
    }
    prev = estimate;
    have_prev = true;
  }
  throw QuadratureNonConvergence({prev, last_diff, evals}, max_levels);
}

/// Integral of f over (0, inf) for integrands with exponential decay, via the
/// substitution u = -ln t onto (0, 1].
template <typename F>
QuadResult integrate_semi_infinite(F&& f, const ExtReal& tol,
                                   int max_levels = detail::TanhSinhNodes::kMaxLevel) {
  auto g = [&f](const ExtReal& t) { return f(-log(t)) / t; };
  return integrate_finite(g, ExtReal(0), ExtReal(1), tol, max_levels);
}

}  // namespace polyasym
