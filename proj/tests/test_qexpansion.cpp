#include "doctest.h"

#include "heckepairs/errors.hpp"
#include "heckepairs/qexpansion.hpp"

using namespace heckepairs;

TEST_CASE("eisenstein low-order coefficients") {
  QExpansion e4 = eisenstein(4, 3);
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);

  QExpansion e6 = eisenstein(6, 3);
  CHECK(e6.coeff(0) == 1);
  CHECK(e6.coeff(1) == -504);
  CHECK(e6.coeff(2) == -16632);
}

TEST_CASE("delta matches the tau table") {
  static const long tau[] = {0,     1,      -24,    252,    -1472,  4830,
                             -6048, -16744, 84480,  -113643, -115920};
  QExpansion d = delta(11);
  for (int n = 0; n <= 10; ++n) CHECK(d.coeff(n) == tau[n]);
}

TEST_CASE("dimension of S_k(1)") {
  CHECK(dim_sk1(0) == 0);
  CHECK(dim_sk1(2) == 0);
  for (int k = 4; k <= 10; k += 2) CHECK(dim_sk1(k) == 0);
  CHECK(dim_sk1(12) == 1);
  CHECK(dim_sk1(14) == 0);
  CHECK(dim_sk1(24) == 2);
  CHECK(dim_sk1(26) == 1);
  CHECK(dim_sk1(36) == 3);
  CHECK(dim_sk1(48) == 4);
  CHECK(dim_sk1(60) == 5);
  for (int k = 4; k <= 120; k += 2) {
    int expect = k / 12 - (k % 12 == 2 ? 1 : 0);
    CHECK(dim_sk1(k) == expect);
  }
}

TEST_CASE("miller basis is echelon with integer entries") {
  for (int k : {12, 16, 24, 26, 36, 48, 60}) {
    int d = dim_sk1(k);
    MillerBasis b = miller_basis(k, d + 8);
    REQUIRE(b.dim == d);
    REQUIRE(static_cast<int>(b.forms.size()) == d);
    for (int i = 0; i < d; ++i) {
      CHECK(b.forms[i].weight() == k);
      CHECK(b.forms[i].coeff(0) == 0);
      for (int j = 0; j < d; ++j)
        CHECK(b.forms[i].coeff(j + 1) == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("weight 12 basis form is delta") {
  MillerBasis b = miller_basis(12, 12);
  REQUIRE(b.dim == 1);
  QExpansion d = delta(12);
  for (int n = 0; n < 12; ++n) CHECK(b.forms[0].coeff(n) == d.coeff(n));
}

TEST_CASE("series arithmetic truncates and scales weight") {
  QExpansion e4 = eisenstein(4, 6);
  QExpansion e43 = e4.pow(3);
  CHECK(e43.weight() == 12);
  QExpansion e6 = eisenstein(6, 6);
  QExpansion num = e43 - e6 * e6;
  // (E4^3 - E6^2)/1728 = Delta, so the difference is 1728 * tau(n).
  QExpansion d = delta(6);
  for (int n = 0; n < 6; ++n) CHECK(num.coeff(n) == 1728 * d.coeff(n));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(eisenstein(5, 3), heckepairs::invalid_argument);
  CHECK_THROWS_AS(dim_sk1(7), heckepairs::invalid_argument);
  CHECK_THROWS_AS(miller_basis(12, 0), heckepairs::invalid_argument);
}
