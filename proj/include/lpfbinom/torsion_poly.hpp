#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lpfbinom/bigint.hpp"
#include "lpfbinom/odd_modulus.hpp"

namespace lpf {

/// Dense polynomial over Z, coefficients in ascending degree. Always kept in
/// canonical form: no zero in the top position except for the zero polynomial,
/// which is stored as an empty vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of X^k; zero past the degree.
  [[nodiscard]] BigInt coeff(std::size_t k) const;
  [[nodiscard]] BigInt leading() const;

  /// Value at x modulo m, by Horner's rule on reduced coefficients.
  [[nodiscard]] std::uint64_t eval_mod(std::uint64_t x, std::uint64_t m) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  /// Multiplication by X.
  [[nodiscard]] IntPolynomial shifted() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

/// Fixed-length coefficient vector of residues modulo n, ascending degree.
/// Zero top coefficients are kept.
struct ResiduePolynomial {
  OddModulus modulus;
  std::vector<std::uint64_t> coeffs;

  /// Degree of the highest nonzero entry, or -1 if every entry is zero.
  [[nodiscard]] long top_nonzero_degree() const noexcept;
};

/// Psi_n from Psi_1 = 1, Psi_3 = X + 1, Psi_{2j+3} = X Psi_{2j+1} - Psi_{2j-1}.
/// Throws DomainError unless n is odd and >= 1.
IntPolynomial psi_recurrence(std::uint64_t n);

/// Dickson polynomial of the second kind,
/// E_n(x, a) = sum_{j=0}^{floor(n/2)} C(n-j, j) (-a)^j x^{n-2j}.
IntPolynomial dickson_e(std::uint64_t n, std::int64_t a);

/// Psi_{2m+1} = E_m(X, 1) + E_{m-1}(X, 1), with E_{-1} = 0.
IntPolynomial psi_from_dickson(std::uint64_t n);

/// Psi_n with the coefficient of X^{(n-1)/2 - r} written directly as
/// (-1)^floor(r/2) C((n-1)/2 - ceil(r/2), floor(r/2)).
IntPolynomial psi_closed_form(std::uint64_t n);

/// (X - 2)^m by the binomial theorem.
IntPolynomial pow_x_minus_2(std::uint64_t m);

/// Psi_n(X) - (X - 2)^{(n-1)/2} with every coefficient reduced mod n. The
/// entry at degree (n-1)/2 - r is alpha(n, r) for 2 <= r <= (n-1)/2.
ResiduePolynomial diff_mod(const OddModulus& n);

/// Whether Psi_p == (X - 2)^{(p-1)/2} coefficientwise mod p. Throws
/// DomainError unless p is an odd prime.
bool psi_mod_p_congruence(std::uint64_t p);

}  // namespace lpf
