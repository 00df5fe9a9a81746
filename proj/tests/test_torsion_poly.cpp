#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpfbinom/errors.hpp"
#include "lpfbinom/lpf_identity.hpp"
#include "lpfbinom/torsion_poly.hpp"

using namespace lpf;

TEST_CASE("psi recurrence examples") {
  CHECK(psi_recurrence(1) == IntPolynomial{1});
  CHECK(psi_recurrence(3) == IntPolynomial{1, 1});
  CHECK(psi_recurrence(5) == IntPolynomial{-1, 1, 1});
  CHECK(psi_recurrence(7) == IntPolynomial{-1, -2, 1, 1});
  CHECK_THROWS_AS(psi_recurrence(4), DomainError);
  CHECK_THROWS_AS(psi_recurrence(0), DomainError);
}

TEST_CASE("dickson examples") {
  CHECK(dickson_e(0, 1) == IntPolynomial{1});
  CHECK(dickson_e(1, 1) == IntPolynomial{0, 1});
  CHECK(dickson_e(2, 1) == IntPolynomial{-1, 0, 1});
  CHECK(dickson_e(3, 1) == IntPolynomial{0, -2, 0, 1});
  // General a: E_2(x, 3) = x^2 - 3.
  CHECK(dickson_e(2, 3) == IntPolynomial{-3, 0, 1});
}

TEST_CASE("psi from dickson and closed form examples") {
  CHECK(psi_from_dickson(1) == IntPolynomial{1});
  CHECK(psi_from_dickson(5) == IntPolynomial{-1, 1, 1});
  CHECK(psi_from_dickson(7) == IntPolynomial{-1, -2, 1, 1});
  CHECK(psi_closed_form(5) == IntPolynomial{-1, 1, 1});
  CHECK(psi_closed_form(3) == IntPolynomial{1, 1});
  CHECK(psi_closed_form(9) == psi_recurrence(9));
  CHECK_THROWS_AS(psi_from_dickson(6), DomainError);
  CHECK_THROWS_AS(psi_closed_form(2), DomainError);
}

TEST_CASE("three constructions agree and are monic of degree (n-1)/2") {
  for (std::uint64_t n = 1; n <= 401; n += 2) {
    const IntPolynomial rec = psi_recurrence(n);
    REQUIRE(rec == psi_from_dickson(n));
    REQUIRE(rec == psi_closed_form(n));
    REQUIRE(rec.degree() == static_cast<long>(n / 2));
    REQUIRE(rec.leading() == 1);
  }
}

TEST_CASE("pow_x_minus_2") {
  CHECK(pow_x_minus_2(0) == IntPolynomial{1});
  CHECK(pow_x_minus_2(1) == IntPolynomial{-2, 1});
  CHECK(pow_x_minus_2(2) == IntPolynomial{4, -4, 1});
  CHECK(pow_x_minus_2(3) == IntPolynomial{-8, 12, -6, 1});
}

TEST_CASE("polynomial canonical form") {
  const IntPolynomial z = IntPolynomial{1, 1} - IntPolynomial{1, 1};
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(IntPolynomial{3, 0, 0}.degree() == 0);
  CHECK(IntPolynomial{1, 2, 3}.eval_mod(5, 7) == (1 + 10 + 75) % 7);
  CHECK(IntPolynomial{-1}.eval_mod(0, 7) == 6);
}

TEST_CASE("diff_mod examples") {
  const ResiduePolynomial d9 = diff_mod(OddModulus(9));
  // Ascending degree: degrees 0..4 hold [3, 3, 0, 0, 0].
  CHECK(d9.coeffs == std::vector<std::uint64_t>{3, 3, 0, 0, 0});
  CHECK(d9.top_nonzero_degree() == 1);

  const ResiduePolynomial d15 = diff_mod(OddModulus(15));
  CHECK(d15.coeffs.size() == 8);
  CHECK(d15.coeffs[4] == 5);
  CHECK(d15.top_nonzero_degree() == 4);
}

TEST_CASE("diff_mod vanishes entirely below r = q for odd primes q <= 97") {
  for (std::uint64_t q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
    const ResiduePolynomial d = diff_mod(OddModulus(q));
    CHECK(d.top_nonzero_degree() == -1);
  }
}

TEST_CASE("diff_mod entries equal alpha and lead with n/p at degree h - p") {
  for (std::uint64_t n = 9; n <= 201; n += 2) {
    const OddModulus mod(n);
    const ResiduePolynomial d = diff_mod(mod);
    const std::uint64_t h = mod.half();
    REQUIRE(d.coeffs.size() == h + 1);
    REQUIRE(d.coeffs[h] == 0);
    REQUIRE(d.coeffs[h - 1] == 0);
    for (std::uint64_t r = 2; r <= h; ++r) REQUIRE(d.coeffs[h - r] == alpha(mod, r));
    const std::uint64_t p = least_prime_factor(n);
    if (p == n) continue;
    REQUIRE(d.top_nonzero_degree() == static_cast<long>(h - p));
    REQUIRE(d.coeffs[h - p] == n / p);
  }
}

TEST_CASE("psi_p congruence") {
  CHECK(psi_mod_p_congruence(3));
  CHECK(psi_mod_p_congruence(5));
  CHECK(psi_mod_p_congruence(7));
  for (std::uint64_t p = 3; p <= 199; p += 2) {
    if (least_prime_factor(p) == p) REQUIRE(psi_mod_p_congruence(p));
  }
  CHECK_THROWS_AS(psi_mod_p_congruence(9), DomainError);
  CHECK_THROWS_AS(psi_mod_p_congruence(4), DomainError);
  CHECK_THROWS_AS(psi_mod_p_congruence(2), DomainError);
}
