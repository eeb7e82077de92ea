#pragma once

#include <stdexcept>
#include <string>

namespace typeb {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Coefficient or entry requested beyond a series' truncation order.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Enumeration or table size above the configured guard.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter combination the operation does not cover.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value that must be integral came out fractional; signals a formula bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace typeb
