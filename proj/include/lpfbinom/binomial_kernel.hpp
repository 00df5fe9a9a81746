#pragma once

#include <cstdint>

#include "lpfbinom/bigint.hpp"
#include "lpfbinom/odd_modulus.hpp"

namespace lpf {

/// m (m-1) ... (m-k+1); the empty product (k = 0) is 1.
BigInt falling_factorial(std::int64_t m, std::uint64_t k);

/// Generalized binomial coefficient falling_factorial(m, k) / k!, defined for
/// every integer m. Vanishes for 0 <= m < k.
BigInt binomial_general(std::int64_t m, std::uint64_t k);

/// binomial_general(m, k) reduced into [0, n). The exact value is formed
/// first; k! is never inverted modulo n.
std::uint64_t binomial_mod(std::int64_t m, std::uint64_t k, const OddModulus& n);

/// The unique s with s^2 <= n < (s+1)^2. Integer arithmetic only.
std::uint64_t isqrt(std::uint64_t n) noexcept;

/// Evaluates both sides of prod_{j=1}^a (a+j) = 2^a prod_{j=0}^{a-1} (2j+1)
/// exactly and reports whether they agree.
bool product_identity_holds(std::uint64_t a);

}  // namespace lpf
