#pragma once

#include <cstdint>

namespace lpf {

/// An odd integer n >= 3 together with floor(sqrt(n)).
class OddModulus {
 public:
  /// Throws DomainError if n is even or n < 3.
  explicit OddModulus(std::uint64_t n);

  [[nodiscard]] std::uint64_t value() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t sqrt_floor() const noexcept { return sqrt_floor_; }
  /// (n - 1) / 2, the upper index appearing throughout the binomial symbol.
  [[nodiscard]] std::uint64_t half() const noexcept { return n_ / 2; }

  friend bool operator==(const OddModulus&, const OddModulus&) = default;

 private:
  std::uint64_t n_;
  std::uint64_t sqrt_floor_;
};

}  // namespace lpf
