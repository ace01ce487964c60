#include <catch2/catch_amalgamated.hpp>

#include "polyasym/bivariate.hpp"
#include "polyasym/coeff_asymptotics.hpp"
#include "polyasym/polylog.hpp"
#include "polyasym/power_series.hpp"

#include <random>

using namespace polyasym;

namespace {

PowerSeries random_series(std::mt19937_64& rng, int order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-9, 9);
  PowerSeries p(order);
  for (int k = 0; k <= order; ++k) p.at(k) = ExtReal(num(rng)) / ExtReal(num(rng) * 2 + 39);
  if (unit_constant) {
    std::uniform_int_distribution<int> lead(1, 4);
    p.at(0) = ExtReal(lead(rng));
    if (num(rng) < 0) p.at(0) = -p[0];
  } else {
    p.at(0) = 0;
  }
  return p;
}

}  // namespace

TEST_CASE("series product basics") {
  PowerSeries a(4), b(4);
  a.at(0) = 1; a.at(1) = 1;    // 1 + z
  b.at(0) = 1; b.at(1) = -1;   // 1 - z
  const PowerSeries p = ps_mul(a, b);
  REQUIRE(p[0] == 1);
  REQUIRE(p[1] == 0);
  REQUIRE(p[2] == -1);
  REQUIRE(p[3] == 0);
}

TEST_CASE("exp times its reciprocal is one") {
  const int order = 6;
  PowerSeries z(order);
  z.at(1) = 1;
  PowerSeries mz(order);
  mz.at(1) = -1;
  const PowerSeries p = ps_mul(ps_exp(z), ps_exp(mz));
  REQUIRE(p[0] == 1);
  for (int k = 1; k <= order; ++k) REQUIRE(abs(p[k]) < tol_at(4));
}

TEST_CASE("square of w = -ln(1-eps)") {
  const int order = 4;
  PowerSeries w(order);
  for (int k = 1; k <= order; ++k) w.at(k) = ExtReal(1) / static_cast<unsigned>(k);
  const PowerSeries w2 = ps_mul(w, w);
  REQUIRE(abs(w2[2] - 1) < tol_at(4));
  REQUIRE(abs(w2[3] - 1) < tol_at(4));
  REQUIRE(abs(w2[4] - ExtReal(11) / 12) < tol_at(4));
}

TEST_CASE("reciprocal: geometric and Fibonacci oracles") {
  PowerSeries a(6);
  a.at(0) = 1; a.at(1) = -1;  // 1 - z
  const PowerSeries g = ps_recip(a);
  for (int k = 0; k <= 6; ++k) REQUIRE(abs(g[k] - 1) < tol_at(4));

  PowerSeries b(6);
  b.at(0) = 1; b.at(1) = 1;  // 1 + z
  const PowerSeries h = ps_recip(b);
  for (int k = 0; k <= 6; ++k) REQUIRE(abs(h[k] - (k % 2 == 0 ? 1 : -1)) < tol_at(4));

  // 1/(1 - z - z^2): Fibonacci numbers by their recurrence.
  PowerSeries f(10);
  f.at(0) = 1; f.at(1) = -1; f.at(2) = -1;
  const PowerSeries fib = ps_recip(f);
  long f0 = 1, f1 = 1;
  REQUIRE(abs(fib[0] - 1) < tol_at(4));
  REQUIRE(abs(fib[1] - 1) < tol_at(4));
  for (int k = 2; k <= 10; ++k) {
    const long f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
    REQUIRE(abs(fib[k] - static_cast<unsigned long>(f2)) < tol_at(4));
  }
  PowerSeries zero_const(3);
  zero_const.at(1) = 1;
  REQUIRE_THROWS_AS(ps_recip(zero_const), std::domain_error);
}

TEST_CASE("reciprocal is a two-sided inverse for random series") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 100; ++trial) {
    const PowerSeries a = random_series(rng, 12, true);
    const PowerSeries p = ps_mul(a, ps_recip(a));
    REQUIRE(abs(p[0] - 1) < tol_at(6));
    for (int k = 1; k <= 12; ++k) REQUIRE(abs(p[k]) < tol_at(6));
  }
}

TEST_CASE("formal log of 1 + z is the Mercator series") {
  PowerSeries z(8);
  z.at(1) = 1;
  const PowerSeries l = ps_log1p(z);
  for (int k = 1; k <= 8; ++k) {
    const ExtReal want = ExtReal(k % 2 == 1 ? 1 : -1) / static_cast<unsigned>(k);
    REQUIRE(abs(l[k] - want) < tol_at(4));
  }
  PowerSeries bad(3);
  bad.at(0) = 1;
  REQUIRE_THROWS_AS(ps_log1p(bad), std::domain_error);
  REQUIRE_THROWS_AS(ps_exp(bad), std::domain_error);
}

TEST_CASE("exp and log1p invert each other on random series") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    const PowerSeries a = random_series(rng, 9, false);
    const PowerSeries back = ps_exp(ps_log1p(a));
    REQUIRE(abs(back[0] - 1) < tol_at(6));
    for (int k = 1; k <= 9; ++k) REQUIRE(abs(back[k] - a[k]) < tol_at(6));
    PowerSeries em1 = ps_exp(a);
    em1.at(0) = 0;
    const PowerSeries again = ps_log1p(em1);
    for (int k = 1; k <= 9; ++k) REQUIRE(abs(again[k] - a[k]) < tol_at(6));
  }
}

TEST_CASE("ln(w/eps) expansion") {
  // ln(w) + L = ln(w/eps) = eps/2 + 5 eps^2/24 + eps^3/8 + ...
  const int order = 5;
  PowerSeries x(order);
  for (int k = 1; k <= order; ++k) x.at(k) = ExtReal(1) / static_cast<unsigned>(k + 1);
  const PowerSeries l = ps_log1p(x);
  REQUIRE(abs(l[1] - ExtReal(1) / 2) < tol_at(4));
  REQUIRE(abs(l[2] - ExtReal(5) / 24) < tol_at(4));
  REQUIRE(abs(l[3] - ExtReal(1) / 8) < tol_at(4));
}

TEST_CASE("bivariate product and Laurent cancellation") {
  // (-L + eps/2)^2 = L^2 - L eps + eps^2/4
  BivariatePoly a(4);
  a.set(0, 1, ExtReal(-1));
  a.set(1, 0, ExtReal(1) / 2);
  const BivariatePoly sq = bv_mul(a, a);
  REQUIRE(abs(sq.coeff(0, 2) - 1) < tol_at(4));
  REQUIRE(abs(sq.coeff(1, 1) + 1) < tol_at(4));
  REQUIRE(abs(sq.coeff(2, 0) - ExtReal(1) / 4) < tol_at(4));

  BivariatePoly pole(4), lin(4);
  pole.set(-1, 0, ExtReal(1));
  lin.set(1, 0, ExtReal(1));
  const BivariatePoly one = bv_mul(pole, lin);
  REQUIRE(abs(one.coeff(0, 0) - 1) < tol_at(4));
  REQUIRE(one.terms().size() == 1);
  REQUIRE_THROWS_AS(bv_mul(pole, pole), std::domain_error);
}

TEST_CASE("w^2 (ln w - 3/2) matches -2 times the singular log part of Li3") {
  const int order = 6;
  // build w and ln w over (eps, L)
  BivariatePoly w(order), lnw(order);
  for (int k = 1; k <= order; ++k) w.set(k, 0, ExtReal(1) / static_cast<unsigned>(k));
  {
    PowerSeries x(order);
    for (int k = 1; k <= order; ++k) x.at(k) = ExtReal(1) / static_cast<unsigned>(k + 1);
    const PowerSeries l = ps_log1p(x);
    lnw.set(0, 1, ExtReal(-1));
    for (int k = 1; k <= order; ++k) lnw.set(k, 0, l[k]);
  }
  BivariatePoly shift(order);
  shift.set(0, 0, ExtReal(-3) / 2);
  const BivariatePoly lhs = bv_mul(bv_mul(w, w), bv_add(lnw, shift));

  // -2 * (w^2 ln w - 3/2 w^2 coefficient block) from the m = 3 expansion:
  // the expansion's singular part is -1/2 w^2 (ln w - H_2), H_2 = 3/2.
  const SingularExpansion e = li_singular_expansion(3, 8);
  BivariatePoly rhs(order);
  {
    // collect the w^2 log term and the w^2 H-term, substitute w(eps), ln w:
    BivariatePoly w2 = bv_mul(w, w);
    BivariatePoly logpart = bv_mul(w2, lnw);
    const ExtReal c_log = e.terms.coeff(2, 1);   // -1/2
    const ExtReal c_plain = e.terms.coeff(2, 0); // +3/4
    rhs = bv_add(bv_scale(logpart, -2 * c_log), bv_scale(w2, -2 * c_plain));
  }
  for (const auto& [k, v] : lhs.terms()) {
    REQUIRE(abs(v - rhs.coeff(k.first, k.second)) < tol_at(6));
  }
  for (const auto& [k, v] : rhs.terms()) {
    REQUIRE(abs(v - lhs.coeff(k.first, k.second)) < tol_at(6));
  }
}

TEST_CASE("graded reciprocal is a two-sided inverse") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    BivariatePoly a(6);
    a.set(1, 0, ExtReal(num(rng) * 2 + 13) / 7);
    for (int i = 2; i <= 6; ++i) {
      for (int j = 0; j <= (i + 1) / 2; ++j) {
        a.set(i, j, ExtReal(num(rng)) / ExtReal(2 * num(rng) + 15));
      }
    }
    const BivariatePoly r = bv_recip_graded(a);
    const BivariatePoly prod = bv_mul(a, r);
    // a "knows" eps^1..eps^6, so the product is exact through eps^5; the
    // eps^6 coefficient is truncation residue.
    REQUIRE(abs(prod.coeff(0, 0) - 1) < tol_at(8));
    for (const auto& [k, v] : prod.terms()) {
      if (k.first == 0 && k.second == 0) continue;
      if (k.first >= a.eps_order()) continue;
      REQUIRE(abs(v) < tol_at(8));
    }
  }
}

TEST_CASE("graded reciprocal contract violations") {
  BivariatePoly no_pole(4);
  no_pole.set(0, 0, ExtReal(1));
  REQUIRE_THROWS_AS(bv_recip_graded(no_pole), std::domain_error);

  BivariatePoly bad_lead(4);
  bad_lead.set(1, 1, ExtReal(1));  // leading coefficient carries L
  REQUIRE_THROWS_AS(bv_recip_graded(bad_lead), std::domain_error);
}

TEST_CASE("m = 3 division reproduces the printed Laurent data") {
  const auto D = derive_D(3, 6);
  const ConstantTable& c = constants();
  const ExtReal z3 = c.zeta(3);
  REQUIRE(abs(d_coeff(D, -1, 0) - 6 * z3 / (c.pi * c.pi)) < tol_at(8));
  REQUIRE(abs(d_coeff(D, 1, 2) - 54 * z3 / pow(c.pi, 6)) < tol_at(8));
  REQUIRE(abs(d_coeff(D, 2, 2) - 27 * z3 * (27 + c.pi * c.pi) / pow(c.pi, 8)) < tol_at(8));
}

TEST_CASE("grading bound honored throughout the pipeline") {
  // The log enters the divided series at eps-index m-2, so the L-degree at
  // eps-degree i of the result is at most floor((i+1)/(m-2)). The division
  // asserts this; here the bound is re-checked on the emitted coefficients
  // and observed to be saturated for m = 3.
  const auto D3 = derive_D(3, 8);
  bool saturated = false;
  for (const auto& [key, v] : D3) {
    if (key.first >= 0) {
      REQUIRE(key.second <= key.first + 1);
      if (key.second == key.first + 1) saturated = true;
    }
  }
  REQUIRE(saturated);
  const auto D4 = derive_D(4, 7);
  for (const auto& [key, v] : D4) {
    if (key.first >= 0) REQUIRE(key.second <= (key.first + 1) / 2);
  }
  const auto D6 = derive_D(6, 7);
  for (const auto& [key, v] : D6) {
    if (key.first >= 0) REQUIRE(key.second <= (key.first + 1) / 4);
  }
}
