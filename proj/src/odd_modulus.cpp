#include "lpfbinom/odd_modulus.hpp"

#include <string>

#include "lpfbinom/binomial_kernel.hpp"
#include "lpfbinom/errors.hpp"

namespace lpf {

OddModulus::OddModulus(std::uint64_t n) : n_(n), sqrt_floor_(0) {
  if (n < 3 || n % 2 == 0) {
    throw DomainError("modulus must be an odd integer >= 3, got " + std::to_string(n));
  }
  sqrt_floor_ = isqrt(n);
}

}  // namespace lpf
