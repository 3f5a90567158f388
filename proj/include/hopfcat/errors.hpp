// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfcat {

/// Arithmetic between scalars (or maps) over different fields.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Structure data whose tensor shapes disagree with the declared dimensions.
class MalformedData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation required an antipode that the data does not carry.
class MissingAntipode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input does not satisfy the axioms an operation presupposes.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A result computed by two independent routes disagreed. Indicates a bug.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input text; carries the 1-based line number (0 if unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hopfcat
