#include "lpfbinom/factorizer.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "lpfbinom/binomial_kernel.hpp"
#include "lpfbinom/errors.hpp"
#include "lpfbinom/lpf_identity.hpp"

namespace lpf {

bool precondition_holds(std::uint64_t n, std::uint64_t p) noexcept {
  return static_cast<unsigned __int128>(4) * n < static_cast<unsigned __int128>(9) * p * p;
}

std::uint64_t below_sqrt_bound(std::uint64_t n) noexcept {
  const std::uint64_t s = isqrt(n);
  return (s * s == n && s > 0) ? s - 1 : s;
}

std::optional<ScanRecord> scan_one(std::uint64_t n) {
  if (n < 9 || n % 2 == 0) return std::nullopt;
  const std::uint64_t p = least_prime_factor(n);
  if (p == n || !precondition_holds(n, p)) return std::nullopt;
  ScanRecord rec{n, p, true, p + 1, below_sqrt_bound(n), {}};
  if (rec.vacuous()) return rec;
  AlphaSweep sweep{OddModulus(n)};
  while (sweep.r() < rec.r_lo) sweep.advance();
  for (; sweep.r() <= rec.r_hi; sweep.advance()) {
    if (sweep.alpha() == 0) rec.violations.push_back(sweep.r());
  }
  return rec;
}

ScanSummary scan_conjecture(std::uint64_t n_min, std::uint64_t n_max, unsigned shards,
                            const std::function<void(const ScanRecord&)>& sink) {
  ScanSummary summary;
  summary.n_min = n_min;
  summary.n_max = n_max;
  if (n_min % 2 == 0) ++n_min;
  if (n_min > n_max) return summary;
  shards = std::max(1u, shards);

  constexpr std::uint64_t kBlock = 8192;  // odd values per block
  std::vector<std::vector<ScanRecord>> parts(shards);
  for (std::uint64_t start = n_min; start <= n_max;) {
    const std::uint64_t count = std::min<std::uint64_t>(kBlock, (n_max - start) / 2 + 1);
    auto work = [&, start, count](unsigned shard) {
      auto& out = parts[shard];
      out.clear();
      // Shard i takes a contiguous slice of the block, so concatenation keeps order.
      const std::uint64_t lo = count * shard / shards;
      const std::uint64_t hi = count * (shard + 1) / shards;
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (auto rec = scan_one(start + 2 * i)) out.push_back(std::move(*rec));
      }
    };
    if (shards == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      threads.reserve(shards);
      for (unsigned s = 0; s < shards; ++s) threads.emplace_back(work, s);
    }
    for (const auto& part : parts) {
      for (const ScanRecord& rec : part) {
        ++summary.records;
        if (!rec.vacuous()) {
          ++summary.nonvacuous;
          summary.alpha_evaluations += rec.r_hi - rec.r_lo + 1;
        }
        summary.violations += rec.violations.size();
        sink(rec);
      }
    }
    const std::uint64_t advance = 2 * count;
    if (n_max - start < advance) break;
    start += advance;
  }
  return summary;
}

std::string_view to_string(FactorOutcome o) noexcept {
  switch (o) {
    case FactorOutcome::Factor: return "Factor";
    case FactorOutcome::NoFactorFound: return "NoFactorFound";
    case FactorOutcome::PreconditionUnverifiable: return "PreconditionUnverifiable";
  }
  return "?";
}

FactorReport binary_search_factor(std::uint64_t n, TrialDivision oracle) {
  if (n < 9 || n % 2 == 0) {
    throw DomainError("binary_search_factor requires an odd n >= 9, got " + std::to_string(n));
  }
  const OddModulus mod(n);
  FactorReport report{n, FactorOutcome::NoFactorFound, std::nullopt, 0, {}, std::nullopt};
  std::uint64_t a1 = 2;
  std::uint64_t a2 = mod.sqrt_floor();
  report.interval_trace.emplace_back(a1, a2);
  while (a2 - a1 > 2) {
    const std::uint64_t mid = a1 + (a2 - a1) / 2;
    ++report.alpha_evaluations;
    if (alpha(mod, mid) == 0) {
      a1 = mid;
    } else {
      a2 = mid;
    }
    report.interval_trace.emplace_back(a1, a2);
  }
  for (std::uint64_t r = a1 + 1; r <= a2; ++r) {
    if (n % r == 0) {
      report.outcome = FactorOutcome::Factor;
      report.factor = r;
      break;
    }
  }
  if (oracle == TrialDivision::Forbidden) {
    if (!report.factor) report.outcome = FactorOutcome::PreconditionUnverifiable;
    return report;
  }
  const std::uint64_t p = least_prime_factor(n);
  report.confirmation = FactorConfirmation{p, p == n, precondition_holds(n, p), report.factor == p};
  return report;
}

}  // namespace lpf
