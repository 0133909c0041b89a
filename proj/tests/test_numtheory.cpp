#include "picenum/numtheory.hpp"

#include <numeric>

#include "doctest.h"

using namespace picenum::numtheory;

TEST_CASE("mobius values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(2) == -1);
  CHECK(mobius(30) == -1);
  CHECK_THROWS(mobius(0));
}

TEST_CASE("totient values") {
  CHECK(totient(1) == 1);
  CHECK(totient(8) == 4);
  CHECK(totient(10) == 4);
  CHECK(totient(1) == 1);
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("gcd_all") {
  CHECK(gcd_all({5}) == 5);
  CHECK(gcd_all({2, 3}) == 1);
  CHECK(gcd_all({4, 6, 10}) == 2);
  CHECK_THROWS(gcd_all({}));
}

TEST_CASE("multiplicativity for coprime pairs up to 200") {
  for (std::int64_t a = 1; a <= 200; ++a)
    for (std::int64_t b = a; a * b <= 200; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(mobius(a * b) == mobius(a) * mobius(b));
      CHECK(totient(a * b) == totient(a) * totient(b));
    }
}

TEST_CASE("divisor sums up to 1000") {
  for (std::int64_t n = 1; n <= 1000; ++n) {
    std::int64_t phi_sum = 0, mu_sum = 0;
    for (auto d : divisors(n)) {
      phi_sum += totient(d);
      mu_sum += mobius(d);
    }
    CHECK(phi_sum == n);
    CHECK(mu_sum == (n == 1 ? 1 : 0));
  }
}
