#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdifs {

// Bad argument to an operation (u == w, non-consecutive path, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A graph description that cannot even be built: unknown vertex, duplicate id.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed spec text. `line` is 1-based, 0 when unknown; `field` is a path
// such as "edges[2].ratio", empty when the JSON itself is broken.
class SpecError : public std::invalid_argument {
 public:
  SpecError(const std::string& what, std::size_t line, std::string field)
      : std::invalid_argument(what), line_(line), field_(std::move(field)) {}
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// A well-formed graph that violates the directed-graph IFS invariants.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<std::string> issues)
      : std::runtime_error(what), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  std::vector<std::string> issues_;
};

// An enumeration would exceed the configured cap. `bound` is the count that
// was requested (saturated at UINT64_MAX).
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t bound)
      : std::runtime_error(what), bound_(bound) {}
  std::uint64_t bound() const { return bound_; }

 private:
  std::uint64_t bound_;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gdifs
