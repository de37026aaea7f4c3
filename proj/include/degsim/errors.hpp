#pragma once

#include <stdexcept>
#include <string>

namespace degsim {

// Error taxonomy shared by the whole library. Everything derives from
// Error so callers can catch the library's failures in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematical precondition violated (division by zero, loops in a
// simple graph, asymmetric input where symmetry is required, ...).
struct DomainError : Error {
    using Error::Error;
};

// Matrix dimensions do not fit the operation.
struct ShapeError : Error {
    using Error::Error;
};

// Input exceeds a hard representation cap (vertex count > 64).
struct CapacityError : Error {
    using Error::Error;
};

// Bad run configuration (composite fingerprint modulus, out-of-range
// evaluation points).
struct ConfigError : Error {
    using Error::Error;
};

// An internal consistency check failed. Never expected to fire.
struct InvariantViolation : Error {
    using Error::Error;
};

// Malformed textual input; carries the byte offset of the defect.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

}  // namespace degsim
