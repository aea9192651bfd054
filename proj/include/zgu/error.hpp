#pragma once

#include <stdexcept>
#include <string>

namespace zgu {

/// A domain error raised on bad input or a violated precondition. `kind()`
/// names the error class (e.g. "NotCoprime", "ParseError") and is stable.
/// The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string &kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

/// An internal consistency check failed. The CLI maps this to exit code 3.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string &what)
      : std::logic_error("InvariantViolation: " + what) {}
};

inline void require(bool cond, const std::string &what) {
  if (!cond)
    throw InvariantViolation(what);
}

} // namespace zgu
