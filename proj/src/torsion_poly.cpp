#include "lpfbinom/torsion_poly.hpp"

#include <string>

#include "lpfbinom/binomial_kernel.hpp"
#include "lpfbinom/errors.hpp"
#include "lpfbinom/lpf_identity.hpp"

namespace lpf {
namespace {

void require_odd(std::uint64_t n, const char* what) {
  if (n == 0 || n % 2 == 0) {
    throw DomainError(std::string(what) + " requires an odd n >= 1, got " + std::to_string(n));
  }
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

BigInt IntPolynomial::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

std::uint64_t IntPolynomial::eval_mod(std::uint64_t x, std::uint64_t m) const {
  unsigned __int128 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = (acc * x + reduce(*it, m)) % m;
  }
  return static_cast<std::uint64_t>(acc);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial IntPolynomial::shifted() const {
  if (is_zero()) return {};
  std::vector<BigInt> out;
  out.reserve(coeffs_.size() + 1);
  out.emplace_back(0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

long ResiduePolynomial::top_nonzero_degree() const noexcept {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] != 0) return static_cast<long>(i);
  }
  return -1;
}

IntPolynomial psi_recurrence(std::uint64_t n) {
  require_odd(n, "psi_recurrence");
  IntPolynomial prev{1};
  if (n == 1) return prev;
  IntPolynomial cur{1, 1};
  for (std::uint64_t k = 3; k < n; k += 2) {
    IntPolynomial next = cur.shifted() - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial dickson_e(std::uint64_t n, std::int64_t a) {
  std::vector<BigInt> coeffs(n + 1);
  const BigInt minus_a = -to_big(a);
  BigInt power = 1;
  for (std::uint64_t j = 0; 2 * j <= n; ++j) {
    coeffs[n - 2 * j] = binomial_general(static_cast<std::int64_t>(n - j), j) * power;
    power *= minus_a;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial psi_from_dickson(std::uint64_t n) {
  require_odd(n, "psi_from_dickson");
  const std::uint64_t m = n / 2;
  IntPolynomial out = dickson_e(m, 1);
  if (m >= 1) out += dickson_e(m - 1, 1);
  return out;
}

IntPolynomial psi_closed_form(std::uint64_t n) {
  require_odd(n, "psi_closed_form");
  const std::uint64_t h = n / 2;
  std::vector<BigInt> coeffs(h + 1);
  for (std::uint64_t r = 0; r <= h; ++r) {
    const std::uint64_t s = r / 2;
    const std::uint64_t t = r - s;
    BigInt c = binomial_general(static_cast<std::int64_t>(h - t), s);
    if (s % 2 == 1) c = -c;
    coeffs[h - r] = std::move(c);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial pow_x_minus_2(std::uint64_t m) {
  std::vector<BigInt> coeffs(m + 1);
  BigInt c = 1;  // C(m, r) (-2)^r, stepped in r
  for (std::uint64_t r = 0; r <= m; ++r) {
    coeffs[m - r] = c;
    if (r < m) {
      c *= -2 * static_cast<long>(m - r);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(r + 1));
    }
  }
  return IntPolynomial(std::move(coeffs));
}

ResiduePolynomial diff_mod(const OddModulus& n) {
  const std::uint64_t h = n.half();
  const IntPolynomial diff = psi_recurrence(n.value()) - pow_x_minus_2(h);
  ResiduePolynomial out{n, std::vector<std::uint64_t>(h + 1, 0)};
  for (std::uint64_t k = 0; k <= h; ++k) out.coeffs[k] = reduce(diff.coeff(k), n.value());
  return out;
}

bool psi_mod_p_congruence(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || least_prime_factor(p) != p) {
    throw DomainError("psi_mod_p_congruence requires an odd prime, got " + std::to_string(p));
  }
  const IntPolynomial diff = psi_recurrence(p) - pow_x_minus_2(p / 2);
  for (const BigInt& c : diff.coeffs()) {
    if (reduce(c, p) != 0) return false;
  }
  return true;
}

}  // namespace lpf
