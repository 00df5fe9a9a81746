#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpf {

/// Outcome of a named exhaustive or sampled check.
struct VerifyResult {
  std::string suite;
  std::uint64_t bound = 0;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  bool passed = true;
  /// Key/value description of the first failing case.
  std::optional<std::vector<std::pair<std::string, std::string>>> counterexample;
};

/// theorem, fleck, dickson, torsion, conic, identity.
std::span<const std::string_view> suite_names() noexcept;

/// Theorem branches for odd n in [9, bound], every r in [2, p].
VerifyResult verify_theorem(std::uint64_t bound);
/// Fleck's congruence (r <= min(p-1, 20)) and Wilson's theorem against primality up to bound.
VerifyResult verify_fleck(std::uint64_t bound);
/// The three Psi constructions, the Psi_p congruence and the diff_mod link, up to bound.
VerifyResult verify_dickson(std::uint64_t bound);
/// Torsion X-coordinate identity for odd n <= bound over 200 sampled conic points.
VerifyResult verify_torsion(std::uint64_t bound, std::uint64_t seed);
/// Group axioms on `bound` sampled triples.
VerifyResult verify_conic(std::uint64_t bound, std::uint64_t seed);
/// The product identity for a in [1, bound].
VerifyResult verify_identity(std::uint64_t bound);

/// Dispatches by name; std::nullopt for an unknown suite.
std::optional<VerifyResult> run_suite(std::string_view name, std::uint64_t bound, std::uint64_t seed);

/// Odd primes below `limit`, by sieve.
std::vector<std::uint64_t> odd_primes_below(std::uint64_t limit);

}  // namespace lpf
