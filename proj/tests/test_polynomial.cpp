#include "doctest.h"

#include <algorithm>

#include "heckepairs/errors.hpp"
#include "heckepairs/polynomial.hpp"

using namespace heckepairs;

namespace {
ZPoly P(std::initializer_list<long> cs) {
  ZPoly p;
  for (long c : cs) p.emplace_back(c);
  return trim(std::move(p));
}
}  // namespace

TEST_CASE("degree and trim") {
  CHECK(degree(ZPoly{}) == -1);
  CHECK(degree(P({5})) == 0);
  CHECK(degree(P({1, 2, 0, 0})) == 1);
}

TEST_CASE("derivative and content") {
  // d/dx (x^3 - 3x + 2) = 3x^2 - 3
  ZPoly p = P({2, -3, 0, 1});
  CHECK(derivative(p) == P({-3, 0, 3}));
  CHECK(content(P({6, -9, 12})) == 3);
  CHECK(primitive_part(P({-4, -8})) == P({1, 2}));
}

TEST_CASE("gcd over Q") {
  // gcd(x^2 - 1, x^3 - 1) = x - 1
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 0, 0, 1})) == P({-1, 1}));
  // coprime inputs give 1
  CHECK(poly_gcd(P({-1, 1}), P({1, 1})) == P({1}));
}

TEST_CASE("exact sign evaluation") {
  ZPoly p = P({-2, 0, 1});  // x^2 - 2
  CHECK(sign_at(p, mpq_class(1)) == -1);
  CHECK(sign_at(p, mpq_class(3, 2)) == 1);
  CHECK(sign_at(P({-4, 0, 1}), mpq_class(2)) == 0);
}

TEST_CASE("yun squarefree decomposition") {
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2
  auto parts = yun_squarefree(P({2, -3, 0, 1}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 1);
  CHECK(parts[0].second == P({2, 1}));
  CHECK(parts[1].first == 2);
  CHECK(parts[1].second == P({-1, 1}));
}

TEST_CASE("berkowitz characteristic polynomial") {
  std::vector<std::vector<mpz_class>> m = {{2, 1}, {1, 2}};
  // eigenvalues 1 and 3
  CHECK(berkowitz_charpoly(m) == P({3, -4, 1}));
  std::vector<std::vector<mpz_class>> z;
  CHECK(berkowitz_charpoly(z) == P({1}));
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P({-1, -1, 1})) == 5);        // x^2 - x - 1
  CHECK(discriminant(P({1, -2, 0, 1})) == 5);      // x^3 - 2x + 1
  CHECK(discriminant(P({1, -2, 1})) == 0);         // (x - 1)^2
}

TEST_CASE("64-bit primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(1000003));
  CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(341));       // Fermat pseudoprime base 2
  CHECK_FALSE(is_prime_u64(561));       // Carmichael
  CHECK_FALSE(is_prime_u64(25326001));  // strong pseudoprime to 2, 3, 5
}

TEST_CASE("root isolation separates simple roots") {
  ZPoly p = P({-2, 0, 1});  // x^2 - 2
  auto roots = isolate_real_roots(p, mpq_class(1, 1024));
  REQUIRE(roots.size() == 2);
  for (const auto& [lo, hi] : roots) {
    CHECK(lo <= hi);
    CHECK(hi - lo <= mpq_class(1, 1024));
    if (lo != hi) CHECK(sign_at(p, lo) * sign_at(p, hi) < 0);
  }
  CHECK(roots[0].second < roots[1].first);  // disjoint, ascending
}

TEST_CASE("root isolation finds integer roots exactly or by enclosure") {
  // roots 1, 2, 3
  ZPoly p = P({-6, 11, -6, 1});
  auto roots = isolate_real_roots(p, mpq_class(1, 64));
  REQUIRE(roots.size() == 3);
  long expect[] = {1, 2, 3};
  for (int i = 0; i < 3; ++i) {
    CHECK(roots[i].first <= expect[i]);
    CHECK(roots[i].second >= expect[i]);
  }
}

TEST_CASE("root isolation on a quartic with negative roots") {
  // (x-1)(x-3)(x-7)(x+5)
  ZPoly p = P({-105, 134, -24, -6, 1});
  auto roots = isolate_real_roots(p, mpq_class(1, 1000000));
  REQUIRE(roots.size() == 4);
  long expect[] = {-5, 1, 3, 7};
  for (int i = 0; i < 4; ++i) {
    CHECK(roots[i].first <= expect[i]);
    CHECK(roots[i].second >= expect[i]);
  }
}

TEST_CASE("root isolation rejects repeated roots and bad tolerance") {
  CHECK_THROWS_AS(isolate_real_roots(P({1, -2, 1}), mpq_class(1, 8)),
                  heckepairs::invalid_argument);
  CHECK_THROWS_AS(isolate_real_roots(P({-2, 0, 1}), mpq_class(0)),
                  heckepairs::invalid_argument);
}

TEST_CASE("root isolation with no real roots") {
  CHECK(isolate_real_roots(P({1, 0, 1}), mpq_class(1, 8)).empty());
}

TEST_CASE("frobenius cycle types") {
  ZPoly p = P({1, 0, 1});  // x^2 + 1
  CHECK(factor_degrees_mod(p, 5) == std::vector<int>{1, 1});
  CHECK(factor_degrees_mod(p, 3) == std::vector<int>{2});
  // (x-1)(x-4) = x^2 - 5x + 4 is (x-1)^2 mod 3: bad reduction reports empty
  CHECK(factor_degrees_mod(P({4, -5, 1}), 3).empty());
}
