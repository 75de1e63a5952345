#include "doctest.h"

#include <cmath>

#include "heckepairs/errors.hpp"
#include "heckepairs/hecke.hpp"
#include "heckepairs/traceformula.hpp"

using namespace heckepairs;

TEST_CASE("hurwitz class numbers, small table") {
  CHECK(hurwitz_class_number(0) == mpq_class(-1, 12));
  CHECK(hurwitz_class_number(3) == mpq_class(1, 3));
  CHECK(hurwitz_class_number(4) == mpq_class(1, 2));
  CHECK(hurwitz_class_number(7) == 1);
  CHECK(hurwitz_class_number(8) == 1);
  CHECK(hurwitz_class_number(11) == 1);
  CHECK(hurwitz_class_number(12) == mpq_class(4, 3));
  CHECK(hurwitz_class_number(15) == 2);
  CHECK(hurwitz_class_number(16) == mpq_class(3, 2));
  CHECK(hurwitz_class_number(20) == 2);
  CHECK(hurwitz_class_number(23) == 3);
  // D = 1, 2 mod 4 carry no forms
  CHECK(hurwitz_class_number(1) == 0);
  CHECK(hurwitz_class_number(2) == 0);
  CHECK(hurwitz_class_number(5) == 0);
}

TEST_CASE("fast table agrees with the direct enumeration") {
  auto table = hurwitz_table(10000);
  for (long d = 0; d <= 10000; ++d)
    CHECK(table->twelfths(d) == hurwitz_twelfths_slow(d));
}

TEST_CASE("kronecker-hurwitz relation") {
  // sum_{t^2 <= 4n} H(4n - t^2) = sum_{d | n} max(d, n/d)
  auto table = hurwitz_table(800);
  for (long n = 1; n <= 200; ++n) {
    mpq_class lhs = 0;
    for (long t = 0; t * t <= 4 * n; ++t) {
      mpq_class h = table->value(4 * n - t * t);
      lhs += (t == 0) ? h : 2 * h;
    }
    mpz_class rhs = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) rhs += std::max(d, n / d);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("gegenbauer recursion values at j = 10") {
  CHECK(gegenbauer_u(10, 2, 1) == 11);
  CHECK(gegenbauer_u(10, 0, 1) == -1);
  CHECK(gegenbauer_u(10, 1, 1) == -1);
  CHECK(gegenbauer_u(10, 0, 2) == -32);
  CHECK(gegenbauer_u(10, 1, 2) == 23);
  CHECK(gegenbauer_u(10, 2, 2) == 32);
  CHECK(gegenbauer_u(0, 5, 7) == 1);
  CHECK(gegenbauer_u(1, 5, 7) == 5);
}

TEST_CASE("trace formula against tau") {
  CHECK(trace_tn(12, 1) == 1);
  CHECK(trace_tn(12, 2) == -24);
  CHECK(trace_tn(12, 3) == 252);
  CHECK(trace_tn(12, 4) == -1472);
  CHECK(trace_tn(24, 1) == 2);
  CHECK(trace_tn(24, 2) == 1080);
}

TEST_CASE("trace at n = 1 is the dimension") {
  for (int k = 4; k <= 60; k += 2) CHECK(trace_tn(k, 1) == dim_sk1(k));
}

TEST_CASE("trace formula against matrix traces") {
  for (int k : {12, 16, 24, 36}) {
    for (long n = 1; n <= 12; ++n) {
      HeckeMatrix m = hecke_matrix(k, n);
      mpz_class tr = 0;
      for (int i = 0; i < m.dim; ++i) tr += m.entries[i][i];
      CHECK(trace_tn(k, n) == tr);
    }
  }
}

TEST_CASE("normalized moment sums") {
  CHECK(moment_sum(12, 2, 0).to_double() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(moment_sum(12, 2, 1).to_double() ==
        doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-13));
  // Tr T_4 - 2^11 Tr T_1 = -3520, over 2^11
  CHECK(moment_sum(12, 2, 2).to_double() == doctest::Approx(-1.71875).epsilon(1e-15));
  CHECK(moment_sum(12, 2, 3).to_double() ==
        doctest::Approx((84480.0 + 2048.0 * 24.0) / std::pow(2.0, 16.5)).epsilon(1e-13));
  CHECK(moment_sum(24, 2, 1).to_double() ==
        doctest::Approx(1080.0 / std::pow(2.0, 11.5)).epsilon(1e-13));
  CHECK(moment_sum(24, 3, 1).to_double() ==
        doctest::Approx(trace_tn(24, 3).get_d() / std::pow(3.0, 11.5)).epsilon(1e-13));
  // dim 0 spaces have vanishing moments
  CHECK(moment_sum(4, 2, 0).to_double() == 0.0);
  CHECK(moment_sum(4, 2, 1).to_double() == 0.0);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(trace_tn(13, 1), heckepairs::invalid_argument);
  CHECK_THROWS_AS(trace_tn(12, 0), heckepairs::invalid_argument);
  CHECK_THROWS_AS(hurwitz_class_number(-1), heckepairs::invalid_argument);
  CHECK_THROWS_AS(moment_sum(12, 4, 1), heckepairs::invalid_argument);
  CHECK_THROWS_AS(moment_sum(12, 2, -1), heckepairs::invalid_argument);
  CHECK_THROWS_AS(gegenbauer_u(-1, 0, 1), heckepairs::invalid_argument);
}
