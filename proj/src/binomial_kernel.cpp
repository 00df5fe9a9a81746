#include "lpfbinom/binomial_kernel.hpp"

#include <limits>

#include "lpfbinom/errors.hpp"

namespace lpf {
namespace {

// Product of (m - j) for j in [lo, hi), by balanced splitting so the
// multiplications stay between operands of similar size.
BigInt descending_product(const BigInt& m, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t len = hi - lo;
  if (len == 0) return 1;
  if (len <= 16) {
    BigInt acc = m - to_big_unsigned(lo);
    for (std::uint64_t j = lo + 1; j < hi; ++j) {
      acc *= BigInt(m - to_big_unsigned(j));
    }
    return acc;
  }
  const std::uint64_t mid = lo + len / 2;
  return descending_product(m, lo, mid) * descending_product(m, mid, hi);
}

}  // namespace

BigInt falling_factorial(std::int64_t m, std::uint64_t k) {
  if (k == 0) return 1;
  // One factor is zero.
  if (m >= 0 && static_cast<std::uint64_t>(m) < k) return 0;
  return descending_product(to_big(m), 0, k);
}

BigInt binomial_general(std::int64_t m, std::uint64_t k) {
  if (k == 0) return 1;
  if (m >= 0 && static_cast<std::uint64_t>(m) < k) return 0;
  if (k > std::numeric_limits<unsigned long>::max()) {
    throw DomainError("binomial lower index too large");
  }
  BigInt num = falling_factorial(m, k);
  BigInt den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::uint64_t binomial_mod(std::int64_t m, std::uint64_t k, const OddModulus& n) {
  return reduce(binomial_general(m, k), n.value());
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  // Newton's iteration from an overestimate; monotone decreasing to floor(sqrt(n)).
  std::uint64_t x = std::uint64_t{1} << ((64 - __builtin_clzll(n)) / 2 + 1);
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

bool product_identity_holds(std::uint64_t a) {
  BigInt lhs = 1;
  for (std::uint64_t j = 1; j <= a; ++j) lhs *= to_big_unsigned(a + j);
  BigInt odd = 1;
  for (std::uint64_t j = 0; j < a; ++j) odd *= to_big_unsigned(2 * j + 1);
  BigInt rhs;
  mpz_mul_2exp(rhs.get_mpz_t(), odd.get_mpz_t(), static_cast<mp_bitcnt_t>(a));
  return lhs == rhs;
}

}  // namespace lpf
