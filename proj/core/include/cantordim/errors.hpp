#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantordim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed specification, invalid argument or violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its configured node budget.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(std::size_t budget)
      : Error("node budget of " + std::to_string(budget) + " states exceeded"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

/// A gauge or table was queried beyond the depth it is defined to.
class DepthExceededError : public Error {
 public:
  DepthExceededError(std::size_t requested, std::size_t available)
      : Error("depth " + std::to_string(requested) + " exceeds available depth " +
              std::to_string(available)),
        requested_(requested),
        available_(available) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t requested_;
  std::size_t available_;
};

/// A point prefix is too short for the block test that was asked for.
class InsufficientDepthError : public Error {
 public:
  InsufficientDepthError(std::size_t needed, std::size_t have)
      : Error("prefix of length " + std::to_string(have) + " is shorter than required " +
              std::to_string(needed)),
        needed_(needed) {}

  std::size_t needed() const noexcept { return needed_; }

 private:
  std::size_t needed_;
};

}  // namespace cantordim
