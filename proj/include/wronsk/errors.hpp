#ifndef WRONSK_ERRORS_HPP
#define WRONSK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wronsk {

/// Malformed input text. `position` is the 0-based byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ZeroDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A section (or tuple) whose Wronskian determinant vanishes identically.
class NotGenericError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConstantMapError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisorMismatchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Probe sections missing or inconsistent with each other.
class ProbeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wronsk

#endif  // WRONSK_ERRORS_HPP
