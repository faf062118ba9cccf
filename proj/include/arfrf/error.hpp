#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arfrf {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// gcd of the generators is not 1 (or a generator is not positive).
class NotNumerical : public Error {
public:
  NotNumerical(const std::string &what, std::int64_t gcd)
      : Error(what), gcd_(gcd) {}
  std::int64_t gcd() const noexcept { return gcd_; }

private:
  std::int64_t gcd_;
};

class NotMember : public Error {
public:
  using Error::Error;
};

class NotPseudoFrobenius : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NotSublattice : public Error {
public:
  using Error::Error;
};

class InvalidFamily : public Error {
public:
  using Error::Error;
};

class UnknownClaim : public Error {
public:
  using Error::Error;
};

class GridTooLarge : public Error {
public:
  using Error::Error;
};

/// A checked 64-bit operation would have overflowed.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Enumeration would produce more RF matrices than the configured cap.
class RfLimitExceeded : public Error {
public:
  RfLimitExceeded(const std::string &what, std::uint64_t count)
      : Error(what), count_(count) {}
  std::uint64_t count() const noexcept { return count_; }

private:
  std::uint64_t count_;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace arfrf
