#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgcolor {

// Malformed .sg or .lst input. Each failure mode has its own kind so callers
// (and tests) can tell them apart without string matching.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    Malformed,
    Loop,
    VertexOutOfRange,
    EdgeCountMismatch,
    DuplicateVertex,
    MissingVertex,
    DuplicateColor,
    EmptyList,
  };

  ParseError(Kind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

// A configurable size cap was exceeded before any exponential work started.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string cap, std::uint64_t limit, const std::string& what)
      : std::runtime_error(what), cap_(std::move(cap)), limit_(limit) {}

  const std::string& cap() const noexcept { return cap_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  std::uint64_t limit_;
};

// Caller broke a documented precondition (unbalanced component handed to a
// balanced-only routine, list of the wrong size, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sgcolor
