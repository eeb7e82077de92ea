#pragma once

// The identity-verification runner behind `typeb verify`. Each check
// compares two independent routes cell by cell and keeps the first mismatch.

#include <optional>
#include <string>
#include <vector>

namespace typeb::verify {

enum class Scope { all, riordan, oracle, howard, asymptotic };

std::string to_string(Scope s);
Scope scope_from_string(const std::string& s);

struct Options {
  Scope scope = Scope::all;
  long max_n = 6;
  long max_r = 3;
};

struct Failure {
  std::string cell;  // e.g. "n=3 k=1 r=3"
  std::string left_value;
  std::string right_value;
};

struct CheckResult {
  std::string name;
  std::string left_source;
  std::string right_source;
  long cells = 0;
  std::optional<Failure> failure;

  bool passed() const { return !failure.has_value(); }
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  // One line per check in a fixed order, then the first failure in detail
  // (if any) and a summary line.
  std::string to_text() const;
};

// Throws DomainError for negative bounds.
Report run(const Options& options);

}  // namespace typeb::verify
