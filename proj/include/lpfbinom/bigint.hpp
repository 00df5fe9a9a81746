#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace lpf {

/// Arbitrary-precision signed integer used for every exact quantity.
using BigInt = mpz_class;

inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline BigInt to_big_unsigned(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Canonical residue of v in [0, m), m > 0.
inline std::uint64_t reduce(const BigInt& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
}

}  // namespace lpf
