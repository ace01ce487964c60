#include <catch2/catch_amalgamated.hpp>

#include "polyasym/euler_sums.hpp"
#include "polyasym/quadrature.hpp"

using namespace polyasym;

namespace {
const long kOracleN = 100000;
}

TEST_CASE("closed forms of the printed linear sums") {
  const ConstantTable& c = constants();
  // 2 S_{1,2} = 5/4 zeta(3)
  REQUIRE(abs(s_pm_linear(2) - 5 * c.zeta(3) / 8) < tol_at(4));
  // 2 S_{1,4} = 59/16 zeta(5) - pi^2 zeta(3)/6
  REQUIRE(abs(s_pm_linear(4) - (59 * c.zeta(5) / 32 - c.pi * c.pi * c.zeta(3) / 12)) < tol_at(4));
  REQUIRE_THROWS_AS(s_pm_linear(3), std::invalid_argument);
}

TEST_CASE("general sum at the printed case and parity contract") {
  const ConstantTable& c = constants();
  REQUIRE(abs(s_pm_general(2, 3) -
              (-11 * c.zeta(5) / 32 + 5 * c.zeta(3) * c.pi * c.pi / 48)) < tol_at(4));
  REQUIRE_THROWS_AS(s_pm_general(2, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(s_pm_general(3, 3), std::invalid_argument);
}

TEST_CASE("oracle agreement at N = 1e5 to 1e-10 or better") {
  const ExtReal tol = pow10(-10);
  REQUIRE(abs(s_pm_linear(2) - s_pm_direct(1, 2, EulerSumKind::linear, kOracleN).value) < tol);
  REQUIRE(abs(s_pm_linear(4) - s_pm_direct(1, 4, EulerSumKind::linear, kOracleN).value) < tol);
  REQUIRE(abs(s13_mu1() - s_pm_direct(1, 3, EulerSumKind::linear, kOracleN).value) < tol);
  REQUIRE(abs(s_pm_general(2, 3) - s_pm_direct(2, 3, EulerSumKind::linear, kOracleN).value) < tol);
  // T3 carries sign (-1)^k, the oracle sums (-1)^(k-1) a_k.
  REQUIRE(abs(t3_quadratic() + s_pm_direct(1, 3, EulerSumKind::quadratic, kOracleN).value) < tol);
  // formula exercised beyond the printed cases
  REQUIRE(abs(s_pm_general(4, 3) - s_pm_direct(4, 3, EulerSumKind::linear, kOracleN).value) <
          pow10(-10));
}

TEST_CASE("mu_1 and its downstream identity") {
  const ConstantTable& c = constants();
  const ExtReal mu1 = s13_mu1();
  REQUIRE(to_fixed(mu1, 4) == "0.8592");
  // S_3 = -2 mu_1 + 7 pi^4/360 equals the printed S_3 closed form.
  const ExtReal s3 = -2 * mu1 + 7 * pow(c.pi, 4) / 360;
  const ExtReal s3_printed = 4 * li_half_numeric(4) - pow(c.pi, 4) / 24 -
                             c.pi * c.pi * c.ln2 * c.ln2 / 6 + pow(c.ln2, 4) / 6 +
                             ExtReal(7) / 2 * c.ln2 * c.zeta(3);
  REQUIRE(abs(s3 - s3_printed) < tol_at(6));
}

TEST_CASE("S_{1,1} against the Abel-summation identity") {
  // sum (-1)^(k-1) H_k/k = zeta(2)/2 - ln^2(2)/2, via the generating
  // function ln(1+x)/(x(1+x)) integrated over [0,1].
  const ConstantTable& c = constants();
  const ExtReal ref = c.zeta(2) / 2 - c.ln2 * c.ln2 / 2;
  const OracleResult o = s_pm_direct(1, 1, EulerSumKind::linear, 10000);
  REQUIRE(abs(o.value - ref) < pow10(-12));
  auto gen = [](const ExtReal& x) {
    return boost::multiprecision::log1p(x) / (x * (1 + x));
  };
  const ExtReal integral = integrate_finite(gen, ExtReal(0), ExtReal(1), tol_at(10)).value;
  REQUIRE(abs(integral - ref) < tol_at(6));
}

TEST_CASE("reflection route: S_{1,2} from the squared-log integral") {
  // int_0^inf ln(1+e^-u)^2 du = -2 S_{1,2} + 3 zeta(3)/2.
  const ConstantTable& c = constants();
  auto f = [](const ExtReal& u) { return pow(boost::multiprecision::log1p(exp(-u)), 2); };
  const ExtReal integral = integrate_semi_infinite(f, tol_at(12)).value;
  const ExtReal via_integral = (3 * c.zeta(3) / 2 - integral) / 2;
  REQUIRE(abs(via_integral - s_pm_linear(2)) < tol_at(8));
}

TEST_CASE("averaged estimates stabilize between N and 2N") {
  const OracleResult a = s_pm_direct(1, 2, EulerSumKind::linear, 2000);
  const OracleResult b = s_pm_direct(1, 2, EulerSumKind::linear, 4000);
  REQUIRE(abs(a.value - b.value) < a.stability + b.stability + pow10(-14));
  REQUIRE(a.stability < pow10(-12));
  REQUIRE_THROWS_AS(s_pm_direct(1, 2, EulerSumKind::linear, 100), std::invalid_argument);
}
