#include "doctest.h"

#include <cmath>

#include "heckepairs/angles.hpp"
#include "heckepairs/errors.hpp"
#include "heckepairs/traceformula.hpp"

using namespace heckepairs;

TEST_CASE("weight 12 angle at p = 2") {
  AngleSet a = angle_set(12, 2);
  REQUIRE(a.dim == 1);
  CHECK_FALSE(a.clamped);
  // a_2 = tau(2) = -24; theta = arccos(-24 / 2^6.5)
  CHECK(a.eigenvalues[0].approx == doctest::Approx(-24.0).epsilon(1e-15));
  double expect = std::acos(-24.0 / std::pow(2.0, 6.5));
  CHECK(a.theta_d[0] == doctest::Approx(expect).epsilon(1e-14));
  CHECK(a.u[0] == doctest::Approx(expect / (2 * M_PI)).epsilon(1e-14));
  CHECK(a.theta_d[0] == doctest::Approx(1.83919).epsilon(1e-5));
  CHECK(a.u[0] == doctest::Approx(0.29272).epsilon(1e-4));
}

TEST_CASE("eigenvalues ascend, angles descend, u stays in [0, 1/2]") {
  for (int k : {24, 36, 48, 60}) {
    for (long p : {2L, 3L, 5L}) {
      AngleSet a = angle_set(k, p);
      REQUIRE(a.dim == dim_sk1(k));
      for (int i = 0; i + 1 < a.dim; ++i) {
        CHECK(a.eigenvalues[i].approx < a.eigenvalues[i + 1].approx);
        CHECK(a.theta_d[i] > a.theta_d[i + 1]);
      }
      for (int i = 0; i < a.dim; ++i) {
        CHECK(a.u[i] >= 0.0);
        CHECK(a.u[i] <= 0.5);
        CHECK(a.theta_d[i] >= 0.0);
        CHECK(a.theta_d[i] <= M_PI + 1e-15);
      }
    }
  }
}

TEST_CASE("certified midpoints sum to the trace") {
  for (int k : {24, 36, 48}) {
    AngleSet a = angle_set(k, 2);
    Real s = Real::from(0L, 160);
    for (const auto& r : a.eigenvalues) s = s + r.mid;
    Real diff = abs(s - Real::from(trace_tn(k, 2), 160));
    CHECK(diff.cmp(1e-15) < 0);
  }
}

TEST_CASE("empirical moments match the trace formula") {
  for (int k : {12, 24, 36, 60}) {
    for (long p : {2L, 3L}) {
      AngleSet a = angle_set(k, p);
      for (int m = 1; m <= 10; ++m) {
        double emp = empirical_moment(a, m).to_double();
        double tf = moment_sum(k, p, m).to_double();
        double scale = std::max({1.0, std::fabs(emp), std::fabs(tf)});
        CHECK(std::fabs(emp - tf) / scale <= 1e-9);
      }
    }
  }
}

TEST_CASE("moment order zero follows the literal convention") {
  AngleSet a = angle_set(24, 2);
  CHECK(empirical_moment(a, 0).to_double() == 4.0);  // 2 * dim
}

TEST_CASE("empty space yields empty angle set") {
  AngleSet a = angle_set(4, 2);
  CHECK(a.dim == 0);
  CHECK(a.theta_d.empty());
  CHECK(empirical_moment(a, 1).to_double() == 0.0);
}

TEST_CASE("explicit tolerance controls the enclosure width") {
  CharPoly cp = charpoly(hecke_matrix(36, 2));
  mpq_class tol(1, 1000);
  auto roots = isolate_roots(cp, tol);
  REQUIRE(roots.size() == 3);
  for (const auto& [lo, hi] : roots) CHECK(hi - lo <= tol);
}

TEST_CASE("deligne window: inside is clamped, outside is fatal") {
  // 2 * 2^5.5 = 90.50966799187808...; the first midpoint squeezes into the
  // 1e-12 window above it, the second lands far outside.
  mpq_class just_above(mpz_class("9050966799188"), mpz_class("100000000000"));
  AngleSet a = to_angles(12, 2, {{just_above, just_above}});
  CHECK(a.clamped);
  CHECK(a.theta_d[0] == 0.0);

  mpq_class neg = -just_above;
  AngleSet b = to_angles(12, 2, {{neg, neg}});
  CHECK(b.clamped);
  CHECK(b.theta_d[0] == doctest::Approx(M_PI).epsilon(1e-15));

  mpq_class far(453, 5);  // 90.6
  CHECK_THROWS_AS(to_angles(12, 2, {{far, far}}), heckepairs::consistency_error);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(to_angles(3, 2, {}), heckepairs::invalid_argument);
  CHECK_THROWS_AS(to_angles(12, 1, {}), heckepairs::invalid_argument);
  CHECK_THROWS_AS(empirical_moment(angle_set(12, 2), -1), heckepairs::invalid_argument);
  mpq_class lo(2), hi(1);
  CHECK_THROWS_AS(to_angles(12, 2, {{lo, hi}}), heckepairs::invalid_argument);
}
