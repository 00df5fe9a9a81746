#include "lpfbinom/lpf_identity.hpp"

#include <limits>
#include <string>

#include "lpfbinom/binomial_kernel.hpp"
#include "lpfbinom/errors.hpp"

namespace lpf {
namespace {

void require_r(std::uint64_t r) {
  if (r < 2) throw DomainError("r must be >= 2, got " + std::to_string(r));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::int64_t checked_i64(__int128 v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
    throw DomainError("binomial upper index out of 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

// C((n-1)/2 - ceil(r/2), floor(r/2)).
BigInt first_term(const OddModulus& n, std::uint64_t r) {
  const __int128 upper = static_cast<__int128>(n.half()) - static_cast<__int128>(r - r / 2);
  return binomial_general(checked_i64(upper), r / 2);
}

BigInt combine(const BigInt& first, const BigInt& second, std::uint64_t r) {
  BigInt t1 = ((r / 2) % 2 == 0) ? first : BigInt(-first);
  BigInt t2;
  mpz_mul_2exp(t2.get_mpz_t(), second.get_mpz_t(), static_cast<mp_bitcnt_t>(r));
  if (r % 2 == 1) t2 = -t2;
  return t1 - t2;
}

std::uint64_t pow2_mod(std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  std::uint64_t base = 2 % m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

std::string_view to_string(AlphaTag tag) noexcept {
  switch (tag) {
    case AlphaTag::BelowLpf: return "BelowLpf";
    case AlphaTag::AtLpf: return "AtLpf";
    case AlphaTag::Above: return "Above";
  }
  return "?";
}

BigInt beta(const OddModulus& n, std::uint64_t r) {
  require_r(r);
  const std::int64_t h = static_cast<std::int64_t>(n.half());
  return combine(first_term(n, r), binomial_general(h, r), r);
}

std::uint64_t alpha(const OddModulus& n, std::uint64_t r) {
  return reduce(beta(n, r), n.value());
}

SymbolEval evaluate(const OddModulus& n, std::uint64_t r) {
  BigInt b = beta(n, r);
  const std::uint64_t a = reduce(b, n.value());
  return SymbolEval{n, r, std::move(b), a};
}

AlphaSweep::AlphaSweep(const OddModulus& n) : n_(n), first_(1), second_(1) { step_to(2); }

void AlphaSweep::advance() { step_to(r_ + 1); }

void AlphaSweep::step_to(std::uint64_t target) {
  const std::uint64_t h = n_.half();
  while (r_ < target) {
    const std::uint64_t next = r_ + 1;
    if (next > 2 * h) {
      // Upper index of the first binomial goes negative; the multiplicative
      // chain would divide by zero here, so evaluate directly.
      first_ = first_term(n_, next);
      second_ = 0;
      r_ = next;
      continue;
    }
    const std::uint64_t s = r_ / 2;
    const long hs = static_cast<long>(h);
    const long ss = static_cast<long>(s);
    if (r_ % 2 == 0) {
      // C(h-s, s) -> C(h-s-1, s) = C(h-s, s) (h-2s) / (h-s)
      mpz_mul_si(first_.get_mpz_t(), first_.get_mpz_t(), hs - 2 * ss);
      if (first_ != 0) {
        mpz_divexact_ui(first_.get_mpz_t(), first_.get_mpz_t(), static_cast<unsigned long>(h - s));
      }
    } else {
      // C(h-s-1, s) -> C(h-s-1, s+1) = C(h-s-1, s) (h-2s-1) / (s+1)
      mpz_mul_si(first_.get_mpz_t(), first_.get_mpz_t(), hs - 2 * ss - 1);
      if (first_ != 0) {
        mpz_divexact_ui(first_.get_mpz_t(), first_.get_mpz_t(), static_cast<unsigned long>(s + 1));
      }
    }
    // C(h, r) -> C(h, r+1) = C(h, r) (h-r) / (r+1)
    if (second_ != 0) {
      mpz_mul_si(second_.get_mpz_t(), second_.get_mpz_t(), hs - static_cast<long>(r_));
      if (second_ != 0) {
        mpz_divexact_ui(second_.get_mpz_t(), second_.get_mpz_t(), static_cast<unsigned long>(next));
      }
    }
    r_ = next;
  }
}

std::uint64_t AlphaSweep::alpha() const {
  const std::uint64_t m = n_.value();
  std::uint64_t t1 = reduce(first_, m);
  if ((r_ / 2) % 2 == 1 && t1 != 0) t1 = m - t1;
  std::uint64_t t2 = 0;
  if (second_ != 0) {
    t2 = mul_mod(reduce(second_, m), pow2_mod(r_, m), m);
    if (r_ % 2 == 1 && t2 != 0) t2 = m - t2;
  }
  return t1 >= t2 ? t1 - t2 : m - (t2 - t1);
}

BigInt AlphaSweep::beta() const { return combine(first_, second_, r_); }

std::uint64_t least_prime_factor(std::uint64_t n) {
  if (n < 2) throw DomainError("least_prime_factor requires n >= 2");
  if (n % 2 == 0) return 2;
  const std::uint64_t limit = isqrt(n);
  for (std::uint64_t d = 3; d <= limit; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

Classification classify(const OddModulus& n, std::uint64_t r) {
  SymbolEval eval = evaluate(n, r);
  const std::uint64_t p = least_prime_factor(n.value());
  AlphaClass cls{AlphaTag::Above, std::nullopt};
  if (r < p) {
    cls = {AlphaTag::BelowLpf, 0};
  } else if (r == p) {
    cls = {AlphaTag::AtLpf, n.value() / p};
  }
  std::optional<bool> consistent;
  if (cls.expected) consistent = (eval.alpha == *cls.expected);
  return Classification{std::move(eval), p, cls, consistent};
}

bool wilson_holds(std::uint64_t n) {
  if (n < 2) throw DomainError("wilson_holds requires n >= 2");
  std::uint64_t acc = 1 % n;
  for (std::uint64_t k = 2; k < n && acc != 0; ++k) acc = mul_mod(acc, k, n);
  return acc == n - 1;
}

bool fleck_holds(const OddModulus& n, std::uint64_t r) {
  const std::uint64_t m = n.value();
  const std::uint64_t p = least_prime_factor(m);
  if (r < 1 || r >= p) {
    throw DomainError("Fleck's congruence needs 1 <= r < " + std::to_string(p) + ", got r = " +
                      std::to_string(r));
  }
  // Left side: C(r+j, r) for j = 0 .. n-1-r, stepped exactly and reduced.
  std::uint64_t lhs = 1 % m;
  BigInt c = 1;
  const std::uint64_t last = m - 1 - r;
  for (std::uint64_t j = 0; j <= last && lhs != 0; ++j) {
    if (j > 0) {
      c *= to_big_unsigned(r + j);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j));
    }
    lhs = mul_mod(lhs, reduce(c, m), m);
  }
  std::uint64_t rhs = 1 % m;
  for (std::uint64_t j = 1; j < r; ++j) {
    rhs = mul_mod(rhs, reduce(binomial_general(static_cast<std::int64_t>(r), j), m), m);
  }
  // (-1)^C(r+1, 2)
  const std::uint64_t tri = r * (r + 1) / 2;
  if (tri % 2 == 1 && rhs != 0) rhs = m - rhs;
  return lhs == rhs;
}

}  // namespace lpf
