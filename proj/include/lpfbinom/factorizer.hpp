#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace lpf {

/// 2 sqrt(n) < 3 p, tested exactly as 4n < 9p^2.
bool precondition_holds(std::uint64_t n, std::uint64_t p) noexcept;

/// Largest integer strictly below sqrt(n): isqrt(n), or isqrt(n) - 1 when n
/// is a perfect square.
std::uint64_t below_sqrt_bound(std::uint64_t n) noexcept;

/// One conjecture check: every r with p < r < sqrt(n) should give a nonzero
/// alpha(n, r). violations lists the r where it did not.
struct ScanRecord {
  std::uint64_t n;
  std::uint64_t p;
  bool precondition_met;
  std::uint64_t r_lo;  // p + 1
  std::uint64_t r_hi;  // below_sqrt_bound(n); the range is empty if r_lo > r_hi
  std::vector<std::uint64_t> violations;

  [[nodiscard]] bool vacuous() const noexcept { return r_lo > r_hi; }
};

struct ScanSummary {
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
  std::uint64_t records = 0;
  std::uint64_t nonvacuous = 0;
  std::uint64_t alpha_evaluations = 0;
  std::uint64_t violations = 0;
};

/// Builds the record for a single odd composite n satisfying the precondition;
/// std::nullopt for any other n.
std::optional<ScanRecord> scan_one(std::uint64_t n);

/// Scans every odd n in [n_min, n_max], handing qualifying records to sink in
/// increasing n. Work is split across `shards` threads in blocks; sink is only
/// ever called from the calling thread.
ScanSummary scan_conjecture(std::uint64_t n_min, std::uint64_t n_max, unsigned shards,
                            const std::function<void(const ScanRecord&)>& sink);

enum class FactorOutcome { Factor, NoFactorFound, PreconditionUnverifiable };

std::string_view to_string(FactorOutcome o) noexcept;

/// Whether the search may fall back on trial division to interpret a failed
/// search and to cross-check a found factor.
enum class TrialDivision { Permitted, Forbidden };

struct FactorConfirmation {
  std::uint64_t least_prime;
  bool n_is_prime;
  bool precondition;
  /// The reported factor (if any) equals least_prime.
  bool agrees;
};

struct FactorReport {
  std::uint64_t n;
  FactorOutcome outcome;
  std::optional<std::uint64_t> factor;
  std::uint64_t alpha_evaluations = 0;
  /// Every interval (a1, a2) held by the search, starting with (2, isqrt(n)).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> interval_trace;
  std::optional<FactorConfirmation> confirmation;
};

/// Bisects (2, isqrt(n)) on whether alpha(n, midpoint) vanishes until the
/// interval is at most 2 wide, then tests the surviving candidates
/// a1 < r <= a2 for divisibility. n odd, n >= 9.
FactorReport binary_search_factor(std::uint64_t n, TrialDivision oracle = TrialDivision::Permitted);

}  // namespace lpf
