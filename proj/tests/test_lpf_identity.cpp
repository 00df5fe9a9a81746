#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpfbinom/errors.hpp"
#include "lpfbinom/lpf_identity.hpp"

using namespace lpf;

namespace {

// Test-only route to C(m, k): the running quotient C(m, j+1) = C(m, j)(m-j)/(j+1),
// one factor at a time, kept separate from the library's product-tree path.
BigInt naive_binomial(long m, unsigned long k) {
  BigInt c = 1;
  for (unsigned long j = 0; j < k; ++j) {
    c *= BigInt(m - static_cast<long>(j));
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j + 1);
  }
  return c;
}

BigInt naive_beta(unsigned long n, unsigned long r) {
  const long h = static_cast<long>((n - 1) / 2);
  const unsigned long s = r / 2;
  const unsigned long t = r - s;
  BigInt first = naive_binomial(h - static_cast<long>(t), s);
  if (s % 2 == 1) first = -first;
  BigInt pow = 1;
  for (unsigned long i = 0; i < r; ++i) pow *= -2;
  return first - naive_binomial(h, r) * pow;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("beta examples") {
  CHECK(beta(OddModulus(9), 2) == -27);
  CHECK(beta(OddModulus(9), 3) == 30);
  CHECK(beta(OddModulus(15), 3) == 275);
}

TEST_CASE("alpha examples") {
  CHECK(alpha(OddModulus(9), 2) == 0);
  CHECK(alpha(OddModulus(9), 3) == 3);
  CHECK(alpha(OddModulus(15), 2) == 0);
  CHECK(alpha(OddModulus(15), 3) == 5);
}

TEST_CASE("r below 2 is a domain error") {
  CHECK_THROWS_AS(beta(OddModulus(9), 1), DomainError);
  CHECK_THROWS_AS(alpha(OddModulus(9), 0), DomainError);
  CHECK_THROWS_AS(classify(OddModulus(9), 1), DomainError);
}

TEST_CASE("beta agrees with the naive term-by-term evaluation") {
  for (unsigned long n = 3; n <= 301; n += 2) {
    for (unsigned long r = 2; r <= n + 4; ++r) {
      REQUIRE(beta(OddModulus(n), r) == naive_beta(n, r));
    }
  }
}

TEST_CASE("sweep reproduces pointwise beta and alpha, including r past n") {
  for (std::uint64_t n : {3ULL, 5ULL, 9ULL, 15ULL, 21ULL, 97ULL, 105ULL, 221ULL, 1001ULL}) {
    const OddModulus mod(n);
    AlphaSweep sweep(mod);
    CHECK(sweep.r() == 2);
    for (; sweep.r() <= n + 10; sweep.advance()) {
      const BigInt b = beta(mod, sweep.r());
      REQUIRE(sweep.beta() == b);
      REQUIRE(sweep.alpha() == reduce(b, n));
    }
  }
}

TEST_CASE("least prime factor") {
  CHECK(least_prime_factor(15) == 3);
  CHECK(least_prime_factor(10403) == 101);
  CHECK(least_prime_factor(97) == 97);
  CHECK(least_prime_factor(2) == 2);
  CHECK(least_prime_factor(9409) == 97);
  CHECK_THROWS_AS(least_prime_factor(1), DomainError);
}

TEST_CASE("classify examples") {
  const auto c92 = classify(OddModulus(9), 2);
  CHECK(c92.cls.tag == AlphaTag::BelowLpf);
  CHECK(c92.cls.expected == 0);
  CHECK(c92.consistent == true);

  const auto c93 = classify(OddModulus(9), 3);
  CHECK(c93.cls.tag == AlphaTag::AtLpf);
  CHECK(c93.cls.expected == 3);
  CHECK(c93.eval.alpha == 3);
  CHECK(c93.consistent == true);

  const auto c155 = classify(OddModulus(15), 5);
  CHECK(c155.cls.tag == AlphaTag::Above);
  CHECK_FALSE(c155.cls.expected.has_value());
  CHECK_FALSE(c155.consistent.has_value());
  CHECK(c155.eval.alpha == alpha(OddModulus(15), 5));
}

TEST_CASE("theorem branches for odd composites up to 3001") {
  for (std::uint64_t n = 9; n <= 3001; n += 2) {
    const std::uint64_t p = least_prime_factor(n);
    if (p == n) continue;
    AlphaSweep sweep{OddModulus(n)};
    for (; sweep.r() < p; sweep.advance()) REQUIRE(sweep.alpha() == 0);
    REQUIRE(sweep.alpha() == n / p);
  }
}

TEST_CASE("prime n: alpha vanishes for r < n") {
  for (std::uint64_t n = 3; n <= 1000; n += 2) {
    if (!is_prime(n)) continue;
    const OddModulus mod(n);
    for (std::uint64_t r = 2; r <= std::min<std::uint64_t>(n - 1, 40); ++r) REQUIRE(alpha(mod, r) == 0);
    // r = p = n: n / p = 1.
    if (n < 200) REQUIRE(alpha(mod, n) == 1);
  }
}

TEST_CASE("wilson") {
  CHECK(wilson_holds(7));
  CHECK_FALSE(wilson_holds(9));
  CHECK(wilson_holds(2));
  CHECK_FALSE(wilson_holds(4));
  for (std::uint64_t n = 2; n <= 1000; ++n) REQUIRE(wilson_holds(n) == is_prime(n));
}

TEST_CASE("fleck examples") {
  CHECK(fleck_holds(OddModulus(7), 2));
  CHECK_FALSE(fleck_holds(OddModulus(9), 2));
  CHECK_FALSE(fleck_holds(OddModulus(15), 1));
  CHECK(fleck_holds(OddModulus(7), 1));
}

TEST_CASE("fleck rejects r outside [1, p)") {
  CHECK_THROWS_AS(fleck_holds(OddModulus(9), 3), DomainError);
  CHECK_THROWS_AS(fleck_holds(OddModulus(15), 0), DomainError);
  CHECK_THROWS_AS(fleck_holds(OddModulus(7), 7), DomainError);
}

TEST_CASE("fleck characterises primes up to 501") {
  for (std::uint64_t n = 3; n <= 501; n += 2) {
    const OddModulus mod(n);
    const std::uint64_t p = least_prime_factor(n);
    bool all = true;
    for (std::uint64_t r = 1; r <= std::min<std::uint64_t>(p - 1, 20); ++r) all = all && fleck_holds(mod, r);
    REQUIRE(all == is_prime(n));
  }
}
