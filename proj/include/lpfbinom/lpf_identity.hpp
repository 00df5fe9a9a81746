#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "lpfbinom/bigint.hpp"
#include "lpfbinom/odd_modulus.hpp"

namespace lpf {

/// beta(n, r) together with its canonical residue alpha(n, r) in [0, n).
struct SymbolEval {
  OddModulus n;
  std::uint64_t r;
  BigInt beta;
  std::uint64_t alpha;
};

enum class AlphaTag { BelowLpf, AtLpf, Above };

std::string_view to_string(AlphaTag tag) noexcept;

/// Which branch of the least-prime-factor theorem (n, r) falls into, with the
/// residue the theorem predicts. Above carries no prediction.
struct AlphaClass {
  AlphaTag tag;
  std::optional<std::uint64_t> expected;
};

struct Classification {
  SymbolEval eval;
  std::uint64_t least_prime;
  AlphaClass cls;
  /// Observed alpha equals the prediction; empty for AlphaTag::Above.
  std::optional<bool> consistent;
};

/// beta(n, r) = (-1)^floor(r/2) C((n-1)/2 - ceil(r/2), floor(r/2))
///              - C((n-1)/2, r) (-2)^r,
/// evaluated exactly with generalized binomials. Throws DomainError for r < 2.
BigInt beta(const OddModulus& n, std::uint64_t r);

/// beta(n, r) mod n in [0, n).
std::uint64_t alpha(const OddModulus& n, std::uint64_t r);

SymbolEval evaluate(const OddModulus& n, std::uint64_t r);

/// Walks r = 2, 3, 4, ... for a fixed n, updating both binomials of beta by
/// one exact multiply/divide per step instead of recomputing them. Every
/// value it yields equals beta(n, r) / alpha(n, r) for the current r.
class AlphaSweep {
 public:
  explicit AlphaSweep(const OddModulus& n);

  [[nodiscard]] std::uint64_t r() const noexcept { return r_; }
  /// alpha(n, r()) from the residues of the two exact terms.
  [[nodiscard]] std::uint64_t alpha() const;
  /// beta(n, r()) exactly.
  [[nodiscard]] BigInt beta() const;
  void advance();

 private:
  OddModulus n_;
  std::uint64_t r_ = 0;
  // C(h - ceil(r/2), floor(r/2)) and C(h, r), h = (n-1)/2. Valid while r <= 2h;
  // past that the chain's upper index turns negative and values are recomputed.
  BigInt first_;
  BigInt second_;
  void step_to(std::uint64_t r);
};

/// Smallest prime dividing n, by trial division up to isqrt(n). n >= 2.
std::uint64_t least_prime_factor(std::uint64_t n);

/// Compares alpha(n, r) with the theorem's prediction, using trial division
/// to find the least prime factor p.
Classification classify(const OddModulus& n, std::uint64_t r);

/// (n-1)! == -1 (mod n), with running reduction. n >= 2.
bool wilson_holds(std::uint64_t n);

/// Fleck's congruence
///   prod_{j=0}^{n-1-r} C(r+j, r) == (-1)^C(r+1,2) prod_{j=1}^{r-1} C(r, j)  (mod n).
/// Requires 1 <= r < least_prime_factor(n); throws DomainError otherwise.
bool fleck_holds(const OddModulus& n, std::uint64_t r);

}  // namespace lpf
