#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chromatic {

// Limits for the exponential enumerations. Operations that walk subset or
// coloring spaces take a Budget and throw ResourceError instead of running
// away on oversized inputs.
struct Budget {
  std::uint64_t max_subsets = std::uint64_t{1} << 24;
  std::uint64_t max_colorings = 10'000'000;
};

class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the verify_* checks when a counting identity fails to hold.
// The message carries the counterexample.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& what)
      : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace chromatic
