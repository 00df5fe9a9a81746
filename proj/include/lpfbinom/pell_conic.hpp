#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace lpf {

/// The conic X^2 - delta Y^2 = 4 over Z/m for odd m >= 3.
class ConicContext {
 public:
  /// Throws DomainError for even m or m < 3.
  ConicContext(std::int64_t delta, std::uint64_t modulus);

  [[nodiscard]] std::int64_t delta() const noexcept { return delta_; }
  /// delta reduced into [0, m).
  [[nodiscard]] std::uint64_t delta_mod() const noexcept { return delta_mod_; }
  [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
  /// Inverse of 2 modulo m.
  [[nodiscard]] std::uint64_t half() const noexcept { return half_; }

  [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
  [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;

  friend bool operator==(const ConicContext& a, const ConicContext& b) noexcept {
    return a.delta_mod_ == b.delta_mod_ && a.modulus_ == b.modulus_;
  }

 private:
  std::int64_t delta_;
  std::uint64_t delta_mod_;
  std::uint64_t modulus_;
  std::uint64_t half_;
};

bool on_conic(std::uint64_t x, std::uint64_t y, const ConicContext& ctx);

/// A point of the conic; construction rejects off-curve coordinates.
class ConicPoint {
 public:
  /// Throws DomainError unless x, y < m and the point satisfies the equation.
  ConicPoint(std::uint64_t x, std::uint64_t y, const ConicContext& ctx);

  /// The group identity (2, 0).
  static ConicPoint identity(const ConicContext& ctx);

  [[nodiscard]] std::uint64_t x() const noexcept { return x_; }
  [[nodiscard]] std::uint64_t y() const noexcept { return y_; }
  [[nodiscard]] const ConicContext& context() const noexcept { return ctx_; }
  /// (x, -y).
  [[nodiscard]] ConicPoint negated() const;

  friend bool operator==(const ConicPoint& a, const ConicPoint& b) noexcept {
    return a.ctx_ == b.ctx_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  struct Unchecked {};
  ConicPoint(std::uint64_t x, std::uint64_t y, const ConicContext& ctx, Unchecked) noexcept
      : x_(x), y_(y), ctx_(ctx) {}
  friend ConicPoint add(const ConicPoint&, const ConicPoint&);

  std::uint64_t x_;
  std::uint64_t y_;
  ConicContext ctx_;
};

/// ((x1 x2 + delta y1 y2) / 2, (x1 y2 + x2 y1) / 2). Throws DomainError when
/// the points live on different conics.
ConicPoint add(const ConicPoint& p1, const ConicPoint& p2);

/// k-fold sum by double-and-add; 0 gives the identity.
ConicPoint scalar_mul(std::uint64_t k, const ConicPoint& p);

/// X(n P) == (X - 2) Psi_n(X)^2 + 2 (mod m), Psi_n evaluated at x(P).
/// Throws DomainError unless n is odd and >= 1.
bool torsion_x_identity_check(std::uint64_t n, const ConicPoint& p);

/// A square root of a modulo an odd prime q (Tonelli-Shanks), if one exists.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t q);

/// Every point whose Y coordinate is y: solutions of x^2 = 4 + delta y^2.
/// The modulus must be an odd prime.
std::vector<ConicPoint> points_with_y(const ConicContext& ctx, std::uint64_t y);

/// A uniformly chosen y followed by a square root, retried until the conic
/// yields a point. The modulus must be an odd prime.
ConicPoint random_point(const ConicContext& ctx, std::mt19937_64& rng);

}  // namespace lpf
