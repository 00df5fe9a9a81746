#pragma once

#include <stdexcept>
#include <string>

namespace lpf {

/// Raised when an argument lies outside an operation's mathematical domain
/// (even modulus, r < 2, Fleck's r >= p, off-curve points, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace lpf
