#ifndef MOMENTLAB_ERRORS_HPP
#define MOMENTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace momentlab {

/// Malformed or out-of-contract input (dimension mismatch, bad parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced a non-finite value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A report or data file could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_dim(long long got, long long want, const char* what) {
  if (got != want) {
    throw InputError(std::string(what) + ": dimension mismatch (got " + std::to_string(got) +
                     ", expected " + std::to_string(want) + ")");
  }
}

}  // namespace detail
}  // namespace momentlab

#endif  // MOMENTLAB_ERRORS_HPP
