#include <doctest.h>

#include <climits>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "lsq/bigint.hpp"

using lsq::BigInt;

TEST_SUITE("bigint") {

TEST_CASE("int64 round trip") {
  for (long long v : {0LL, 1LL, -1LL, 42LL, -1000000007LL, LLONG_MAX, LLONG_MIN}) {
    BigInt b(v);
    CHECK(b.fits_int64());
    CHECK(b.to_int64() == v);
  }
}

TEST_CASE("string rendering") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-7).to_string() == "-7");
  CHECK(BigInt(1000000000LL).to_string() == "1000000000");
  CHECK(BigInt(12000000000LL).to_string() == "12000000000");
  BigInt big(1);
  for (int i = 0; i < 5; ++i) big *= BigInt(1000000000000LL);
  CHECK(big.to_string() == "1" + std::string(60, '0'));
}

TEST_CASE("arithmetic agrees with 64-bit arithmetic on small operands") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 2000; ++trial) {
    long long a = static_cast<long long>(gen() % 2000001) - 1000000;
    long long b = static_cast<long long>(gen() % 2000001) - 1000000;
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
  }
}

TEST_CASE("multiplication carries across limbs") {
  BigInt a(LLONG_MAX);
  BigInt sq = a * a;
  CHECK(!sq.fits_int64());
  // (2^63-1)^2 = 2^126 - 2^64 + 1
  CHECK(sq.to_string() == "85070591730234615847396907784232501249");
  CHECK(sq.exact_div(a) == a);
}

TEST_CASE("divmod truncates toward zero") {
  auto check = [](long long a, long long d) {
    BigInt q, r;
    BigInt::divmod(BigInt(a), BigInt(d), q, r);
    CHECK(q.to_int64() == a / d);
    CHECK(r.to_int64() == a % d);
  };
  check(17, 5);
  check(-17, 5);
  check(17, -5);
  check(-17, -5);
  check(0, 3);
  check(100, 100);
}

TEST_CASE("gcd is the positive greatest common divisor") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)).to_int64() == 6);
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)).to_int64() == 6);
  CHECK(BigInt::gcd(BigInt(0), BigInt(-5)).to_int64() == 5);
  CHECK(BigInt::gcd(BigInt(7), BigInt(0)).to_int64() == 7);
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    long long a = static_cast<long long>(gen() % 1000000) + 1;
    long long b = static_cast<long long>(gen() % 1000000) + 1;
    long long g = BigInt::gcd(BigInt(a), BigInt(b)).to_int64();
    CHECK(a % g == 0);
    CHECK(b % g == 0);
    CHECK(BigInt::gcd(BigInt(a / g), BigInt(b / g)).to_int64() == 1);
  }
}

TEST_CASE("exact division of large products") {
  BigInt a(1234567891011LL);
  BigInt b(987654321987LL);
  BigInt product = a * b;
  CHECK(product.exact_div(b) == a);
  CHECK(product.exact_div(a) == b);
  CHECK((-product).exact_div(b) == -a);
  CHECK_THROWS_AS((product + BigInt(1)).exact_div(b), std::logic_error);
}

}  // TEST_SUITE
