#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "heckepairs/bounds.hpp"
#include "heckepairs/errors.hpp"
#include "heckepairs/plancherel.hpp"

using namespace heckepairs;

TEST_CASE("splitmix is a pure function of seed and index") {
  CHECK(splitmix_u64(1, 0) == splitmix_u64(1, 0));
  CHECK(splitmix_u64(1, 0) != splitmix_u64(1, 1));
  CHECK(splitmix_u64(1, 0) != splitmix_u64(2, 0));
  for (int i = 0; i < 1000; ++i) {
    double u = splitmix_unit(7, i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("density normalizes to unit mass") {
  for (long p : {2L, 3L, 5L}) {
    PlancherelSampler s(p, 1);
    CHECK(std::fabs(s.mass() - 1.0) <= 1e-6);
    CHECK(s.density_moment(0) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("density moments reproduce the c_m") {
  for (long p : {2L, 3L}) {
    PlancherelSampler s(p, 1);
    for (int m = 1; m <= 8; ++m) {
      double cm = Real::from(c_coeff(p, m)).to_double();
      CHECK(s.density_moment(m) == doctest::Approx(cm).epsilon(1e-6));
    }
  }
}

TEST_CASE("draws are reproducible and counter-addressable") {
  PlancherelSampler s(2, 42);
  auto a = s.sample(10, 0);
  auto b = s.sample(10, 0);
  CHECK(a == b);
  auto tail = s.sample(5, 5);
  for (int i = 0; i < 5; ++i) CHECK(a[5 + i] == tail[i]);
  for (double t : a) {
    CHECK(t >= 0.0);
    CHECK(t <= M_PI);
  }
}

TEST_CASE("sample moments agree with the target measure") {
  PlancherelSampler s(2, 42);
  const std::size_t n = 200000;
  auto draws = s.sample(n, 0);
  for (int m = 1; m <= 4; ++m) {
    double sum = 0.0;
    for (double t : draws) sum += 2.0 * std::cos(m * t);
    double mean = sum / static_cast<double>(n);
    double cm = Real::from(c_coeff(2, m)).to_double();
    // 5 sigma with Var(2cos) <= 3
    CHECK(std::fabs(mean - cm) <= 5.0 * std::sqrt(3.0 / static_cast<double>(n)));
  }
}

TEST_CASE("inverse cdf is monotone in u") {
  PlancherelSampler s(3, 9);
  auto draws = s.sample(4000, 0);
  std::vector<std::pair<double, double>> by_u;
  for (std::size_t i = 0; i < draws.size(); ++i)
    by_u.emplace_back(splitmix_unit(9, i), draws[i]);
  std::sort(by_u.begin(), by_u.end());
  for (std::size_t i = 0; i + 1 < by_u.size(); ++i)
    CHECK(by_u[i].second <= by_u[i + 1].second + 1e-12);
}

TEST_CASE("deviation scaling runs deterministically") {
  std::vector<long> dims = {10, 30, 100};
  ScalingResult a = deviation_scaling(2, dims, 100, 1, 7);
  ScalingResult b = deviation_scaling(2, dims, 100, 1, 7);
  CHECK(a.slope == b.slope);
  CHECK(a.stderr_slope == b.stderr_slope);
  REQUIRE(a.per_dim.size() == 3);
  for (const auto& d : a.per_dim) CHECK(d.rms > 0.0);
  REQUIRE(a.deviations.size() == 3);
  for (const auto& row : a.deviations) CHECK(row.size() == 100);
  // square-root cancellation, loosely at this size
  CHECK(a.slope > 0.3);
  CHECK(a.slope < 0.7);
  CHECK(a.stderr_slope > 0.0);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(PlancherelSampler(4, 1), heckepairs::invalid_argument);
  std::vector<long> dims = {10, 30};
  CHECK_THROWS_AS(deviation_scaling(2, dims, 50, 1, 1), heckepairs::invalid_argument);
  CHECK_THROWS_AS(deviation_scaling(2, dims, 100, 0, 1), heckepairs::invalid_argument);
  std::vector<long> bad = {30, 10};
  CHECK_THROWS_AS(deviation_scaling(2, bad, 100, 1, 1), heckepairs::invalid_argument);
  std::vector<long> tiny = {5, 20};
  CHECK_THROWS_AS(deviation_scaling(2, tiny, 100, 1, 1), heckepairs::invalid_argument);
  std::vector<long> empty;
  CHECK_THROWS_AS(deviation_scaling(2, empty, 100, 1, 1), heckepairs::invalid_argument);
}
