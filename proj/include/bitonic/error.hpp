#ifndef BITONIC_ERROR_HPP
#define BITONIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bitonic {

// Raised when an array length, exponent, or index is outside the domain the
// network accepts (non-power-of-two length, k out of range, mismatched plan).
class invalid_size_error : public std::invalid_argument {
 public:
  explicit invalid_size_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Raised for bad run configuration: block capacity, worker count, repetition
// count, unknown strategy names and the like.
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace bitonic

#endif  // BITONIC_ERROR_HPP
