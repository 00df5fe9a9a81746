#include "lpfbinom/verify.hpp"

#include <array>
#include <random>

#include "lpfbinom/binomial_kernel.hpp"
#include "lpfbinom/lpf_identity.hpp"
#include "lpfbinom/pell_conic.hpp"
#include "lpfbinom/torsion_poly.hpp"

namespace lpf {
namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

constexpr std::array<std::string_view, 6> kSuites = {"theorem", "fleck", "dickson", "torsion", "conic", "identity"};
constexpr std::uint64_t kConicModulusLimit = 10000;
constexpr std::uint64_t kTorsionSamples = 200;

std::string str(std::uint64_t v) { return std::to_string(v); }

VerifyResult start(std::string suite, std::uint64_t bound, std::uint64_t seed) {
  VerifyResult res;
  res.suite = std::move(suite);
  res.bound = bound;
  res.seed = seed;
  return res;
}

void fail(VerifyResult& res, Fields fields) {
  res.passed = false;
  res.counterexample = std::move(fields);
}

Fields point_fields(const std::string& tag, const ConicPoint& p) {
  return {{tag + ".x", str(p.x())}, {tag + ".y", str(p.y())}};
}

Fields concat(Fields a, const Fields& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ConicContext random_context(std::mt19937_64& rng, std::span<const std::uint64_t> primes) {
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  const std::uint64_t m = primes[pick(rng)];
  std::uniform_int_distribution<std::int64_t> pick_delta(-static_cast<std::int64_t>(m), static_cast<std::int64_t>(m));
  return ConicContext(pick_delta(rng), m);
}

}  // namespace

std::span<const std::string_view> suite_names() noexcept { return kSuites; }

std::vector<std::uint64_t> odd_primes_below(std::uint64_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    if (i > 2) out.push_back(i);
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

VerifyResult verify_theorem(std::uint64_t bound) {
  VerifyResult res = start("theorem", bound, 0);
  for (std::uint64_t n = 9; n <= bound; n += 2) {
    const std::uint64_t p = least_prime_factor(n);
    AlphaSweep sweep{OddModulus(n)};
    for (; sweep.r() <= p; sweep.advance()) {
      const std::uint64_t r = sweep.r();
      const std::uint64_t expected = r < p ? 0 : n / p;
      ++res.checked;
      if (sweep.alpha() != expected) {
        fail(res, {{"n", str(n)}, {"r", str(r)}, {"p", str(p)}, {"alpha", str(sweep.alpha())}, {"expected", str(expected)}});
        return res;
      }
    }
  }
  return res;
}

VerifyResult verify_fleck(std::uint64_t bound) {
  VerifyResult res = start("fleck", bound, 0);
  for (std::uint64_t n = 3; n <= bound; n += 2) {
    const OddModulus mod(n);
    const std::uint64_t p = least_prime_factor(n);
    const std::uint64_t r_max = std::min<std::uint64_t>(p - 1, 20);
    bool all = true;
    for (std::uint64_t r = 1; r <= r_max && all; ++r) all = fleck_holds(mod, r);
    ++res.checked;
    if (all != (p == n)) {
      fail(res, {{"check", "fleck"}, {"n", str(n)}, {"prime", p == n ? "true" : "false"}, {"holds", all ? "true" : "false"}});
      return res;
    }
  }
  for (std::uint64_t n = 2; n <= bound; ++n) {
    const bool prime = least_prime_factor(n) == n;
    ++res.checked;
    if (wilson_holds(n) != prime) {
      fail(res, {{"check", "wilson"}, {"n", str(n)}, {"prime", prime ? "true" : "false"}});
      return res;
    }
  }
  return res;
}

VerifyResult verify_dickson(std::uint64_t bound) {
  VerifyResult res = start("dickson", bound, 0);
  for (std::uint64_t n = 1; n <= bound; n += 2) {
    const IntPolynomial rec = psi_recurrence(n);
    ++res.checked;
    if (rec != psi_from_dickson(n) || rec != psi_closed_form(n)) {
      fail(res, {{"check", "constructions"}, {"n", str(n)}});
      return res;
    }
    if (rec.degree() != static_cast<long>(n / 2) || rec.leading() != 1) {
      fail(res, {{"check", "monic_degree"}, {"n", str(n)}});
      return res;
    }
  }
  for (std::uint64_t p : odd_primes_below(bound + 1)) {
    ++res.checked;
    if (!psi_mod_p_congruence(p)) {
      fail(res, {{"check", "congruence"}, {"p", str(p)}});
      return res;
    }
  }
  for (std::uint64_t n = 9; n <= bound; n += 2) {
    const std::uint64_t p = least_prime_factor(n);
    if (p == n) continue;
    const OddModulus mod(n);
    const ResiduePolynomial diff = diff_mod(mod);
    const std::uint64_t h = mod.half();
    ++res.checked;
    if (diff.coeffs[h] != 0 || diff.coeffs[h - 1] != 0) {
      fail(res, {{"check", "diff_low_r"}, {"n", str(n)}});
      return res;
    }
    AlphaSweep sweep(mod);
    for (; sweep.r() <= h; sweep.advance()) {
      if (diff.coeffs[h - sweep.r()] != sweep.alpha()) {
        fail(res, {{"check", "diff_alpha"}, {"n", str(n)}, {"r", str(sweep.r())}});
        return res;
      }
    }
    if (diff.top_nonzero_degree() != static_cast<long>(h - p) || diff.coeffs[h - p] != n / p) {
      fail(res, {{"check", "diff_leading"}, {"n", str(n)}, {"p", str(p)}});
      return res;
    }
  }
  return res;
}

VerifyResult verify_torsion(std::uint64_t bound, std::uint64_t seed) {
  VerifyResult res = start("torsion", bound, seed);
  const auto primes = odd_primes_below(kConicModulusLimit);
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < kTorsionSamples; ++i) {
    const ConicContext ctx = random_context(rng, primes);
    const ConicPoint pt = random_point(ctx, rng);
    for (std::uint64_t n = 1; n <= bound; n += 2) {
      ++res.checked;
      if (!torsion_x_identity_check(n, pt)) {
        fail(res, concat({{"n", str(n)}, {"delta", std::to_string(ctx.delta())}, {"m", str(ctx.modulus())}},
                         point_fields("P", pt)));
        return res;
      }
    }
  }
  return res;
}

VerifyResult verify_conic(std::uint64_t bound, std::uint64_t seed) {
  VerifyResult res = start("conic", bound, seed);
  const auto primes = odd_primes_below(kConicModulusLimit);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_k(0, 64);
  for (std::uint64_t i = 0; i < bound; ++i) {
    const ConicContext ctx = random_context(rng, primes);
    const ConicPoint a = random_point(ctx, rng);
    const ConicPoint b = random_point(ctx, rng);
    const ConicPoint c = random_point(ctx, rng);
    const Fields where = concat(concat(concat({{"delta", std::to_string(ctx.delta())}, {"m", str(ctx.modulus())}},
                                              point_fields("A", a)),
                                       point_fields("B", b)),
                                point_fields("C", c));
    const ConicPoint e = ConicPoint::identity(ctx);
    const ConicPoint ab = add(a, b);
    const ConicPoint ab_c = add(ab, c);
    const ConicPoint a_bc = add(a, add(b, c));
    ++res.checked;
    auto check = [&](bool ok, const char* what) {
      if (!ok) fail(res, concat({{"check", what}}, where));
      return ok;
    };
    if (!check(on_conic(ab.x(), ab.y(), ctx) && on_conic(ab_c.x(), ab_c.y(), ctx), "closure")) return res;
    if (!check(add(a, e) == a && add(e, a) == a, "identity")) return res;
    if (!check(add(a, a.negated()) == e, "inverse")) return res;
    if (!check(ab == add(b, a), "commutativity")) return res;
    if (!check(ab_c == a_bc, "associativity")) return res;
    const std::uint64_t k = pick_k(rng);
    ConicPoint iterated = e;
    for (std::uint64_t j = 0; j < k; ++j) iterated = add(iterated, a);
    if (!check(scalar_mul(k, a) == iterated, "scalar_mul")) return res;
  }
  return res;
}

VerifyResult verify_identity(std::uint64_t bound) {
  VerifyResult res = start("identity", bound, 0);
  for (std::uint64_t a = 1; a <= bound; ++a) {
    ++res.checked;
    if (!product_identity_holds(a)) {
      fail(res, {{"a", str(a)}});
      return res;
    }
  }
  return res;
}

std::optional<VerifyResult> run_suite(std::string_view name, std::uint64_t bound, std::uint64_t seed) {
  if (name == "theorem") return verify_theorem(bound);
  if (name == "fleck") return verify_fleck(bound);
  if (name == "dickson") return verify_dickson(bound);
  if (name == "torsion") return verify_torsion(bound, seed);
  if (name == "conic") return verify_conic(bound, seed);
  if (name == "identity") return verify_identity(bound);
  return std::nullopt;
}

}  // namespace lpf
