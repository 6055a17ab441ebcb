#pragma once

#include <stdexcept>
#include <string>

namespace mwlat {

// Malformed input text or flags. CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(position == npos
                               ? what
                               : what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
};

// A mathematical precondition or consistency check failed. CLI exit code 3.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A modulus in a field tower turned out to be reducible: a zero divisor was hit.
class ReducibleModulusError : public MathError {
 public:
  ReducibleModulusError(std::size_t level, const std::string& name)
      : MathError("zero divisor in field tower: modulus at level " + std::to_string(level) +
                  " ('" + name + "') is reducible"),
        level_(level) {}

  std::size_t level() const { return level_; }

 private:
  std::size_t level_;
};

// Fixture file missing or failed validation. CLI exit code 4.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mwlat
