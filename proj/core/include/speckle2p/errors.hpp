#ifndef SPECKLE2P_ERRORS_HPP
#define SPECKLE2P_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace s2p {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A constraint on an input value was violated. Carries the name of the
/// offending field so callers (and the CLI) can point at it.
class ValidationError : public Error {
public:
  ValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

/// Requested a fringe-based quantity for a configuration that produces none.
class NoFringesError : public Error {
public:
  using Error::Error;
};

/// Scan grid too coarse to resolve the expected fringe period.
class GridTooCoarseError : public Error {
public:
  using Error::Error;
};

/// Two curves do not share a scan grid.
class GridMismatchError : public Error {
public:
  using Error::Error;
};

/// Filesystem-level failure (unreadable input, unwritable output).
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace s2p

#endif
