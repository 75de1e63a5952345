#include "doctest.h"

#include <cmath>
#include <complex>

#include "heckepairs/errors.hpp"
#include "heckepairs/selberg.hpp"

using namespace heckepairs;

TEST_CASE("constant coefficient is exact") {
  SelbergCoeffs s = build_majorant(mpq_class(-1, 10), mpq_class(1, 10), 9);
  CHECK(s.c0 == mpq_class(3, 10));  // b - a + 1/(M+1)
  SelbergCoeffs t = build_majorant(mpq_class(-1, 4), mpq_class(1, 3), 11);
  CHECK(t.c0 == mpq_class(1, 4) + mpq_class(1, 3) + mpq_class(1, 12));
}

TEST_CASE("vaaler kernel transform") {
  CHECK(vaaler_jhat(0.0) == 1.0);
  CHECK(vaaler_jhat(1.0) == 0.0);
  CHECK(vaaler_jhat(-1.0) == 0.0);
  CHECK(vaaler_jhat(0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(vaaler_jhat(0.25) == doctest::Approx(M_PI * 3.0 / 16.0 + 0.25).epsilon(1e-14));
  for (double t = -0.95; t < 1.0; t += 0.05) {
    CHECK(vaaler_jhat(t) >= 0.0);
    CHECK(vaaler_jhat(t) <= 1.0 + 1e-15);
    CHECK(vaaler_jhat(t) == doctest::Approx(vaaler_jhat(-t)).epsilon(1e-14));
  }
}

TEST_CASE("indicator coefficients") {
  mpq_class a(-1, 4), b(1, 4);
  CHECK(chi_hat(a, b, 1).real() == doctest::Approx(1.0 / M_PI).epsilon(1e-14));
  CHECK(chi_hat(a, b, 1).imag() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(std::abs(chi_hat(a, b, 2)) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(chi_hat(a, b, 3).real() == doctest::Approx(-1.0 / (3 * M_PI)).epsilon(1e-14));
}

TEST_CASE("negative coefficients are conjugates") {
  SelbergCoeffs s = build_majorant(mpq_class(-2, 5), mpq_class(1, 10), 25);
  for (long n = 1; n <= 25; ++n) {
    CHECK(s.coeff(-n).real() == s.coeff(n).real());
    CHECK(s.coeff(-n).imag() == -s.coeff(n).imag());
  }
  CHECK(s.coeff(0).imag() == 0.0);
}

TEST_CASE("majorant properties across configurations") {
  struct Cfg { long an, ad, bn, bd; int M; };
  const Cfg cfgs[] = {
      {-1, 10, 1, 10, 9},   {-1, 4, 1, 4, 20},  {-1, 2, 1, 2, 10},
      {0, 1, 1, 3, 50},     {-1, 3, -1, 6, 35}, {1, 8, 3, 8, 100},
      {-2, 5, 1, 10, 60},   {-1, 20, 1, 20, 5}, {-1, 7, 2, 7, 150},
      {-3, 8, -1, 8, 80},   {1, 100, 1, 2, 40}, {-1, 2, -1, 4, 15},
  };
  for (const auto& c : cfgs) {
    CAPTURE(c.an); CAPTURE(c.ad); CAPTURE(c.bn); CAPTURE(c.bd); CAPTURE(c.M);
    SelbergCoeffs s = build_majorant(mpq_class(c.an, c.ad), mpq_class(c.bn, c.bd), c.M);
    SelbergCheck r = check_majorant(s, 2000);
    CHECK(r.majorization);
    CHECK(r.constant_exact);
    CHECK(r.coeff_bound);
    CHECK(r.min_slack_a >= -1e-12);
  }
}

TEST_CASE("majorant exceeds the indicator pointwise") {
  SelbergCoeffs s = build_majorant(mpq_class(-1, 8), mpq_class(1, 8), 30);
  CHECK(evaluate(s, 0.0) >= 1.0 - 1e-12);
  CHECK(evaluate(s, 0.125) >= 1.0 - 1e-12);   // right endpoint included
  CHECK(evaluate(s, -0.125) >= 1.0 - 1e-12);
  CHECK(evaluate(s, 0.4) >= -1e-12);
  CHECK(evaluate(s, -0.5) >= -1e-12);
}

TEST_CASE("coefficient decay bound") {
  SelbergCoeffs s = build_majorant(mpq_class(-1, 6), mpq_class(1, 6), 120);
  double ba = 1.0 / 3.0;
  for (long n = 1; n <= 120; ++n) {
    double cap = 1.0 / 121.0 + std::min(ba, 1.0 / (M_PI * n));
    CHECK(std::abs(s.coeff(n)) <= cap + 1e-15);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(build_majorant(mpq_class(1, 4), mpq_class(1, 8), 9),
                  heckepairs::invalid_argument);
  CHECK_THROWS_AS(build_majorant(mpq_class(-3, 4), mpq_class(1, 8), 9),
                  heckepairs::invalid_argument);
  CHECK_THROWS_AS(build_majorant(mpq_class(-1, 8), mpq_class(3, 4), 9),
                  heckepairs::invalid_argument);
  CHECK_THROWS_AS(build_majorant(mpq_class(-1, 8), mpq_class(1, 8), 0),
                  heckepairs::invalid_argument);
}
