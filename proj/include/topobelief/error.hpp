#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topobelief {

/// Base of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `offset` is the byte position of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A world index or subset outside the carrier.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An open-set family that is not a topology.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// Malformed model document or scenario literal.
class DocumentError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied to an argument of the wrong shape
/// (e.g. a relational query with K in the formula, or STRONG with a doxastic range).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace topobelief
