#pragma once

// Serialization of materialized tables. Integers are written as plain
// decimal digits in every format, so values of any size round-trip exactly.

#include <string>

#include "typeb/riordan.hpp"

namespace typeb::io {

// A table together with the request that produced it. Sequences are stored
// as a single row.
struct LabeledTable {
  std::string family;
  long m = 0;
  long r = 0;
  riordan::TriangleTable table;

  friend bool operator==(const LabeledTable&, const LabeledTable&) = default;
};

// {"family": ..., "m": ..., "r": ..., "rows": [[...], ...], "provenance": ...}
std::string to_json(const LabeledTable& t);
// Throws DomainError on malformed input or non-integer entries.
LabeledTable from_json(const std::string& text);

// One line per row, comma separated.
std::string to_csv(const riordan::TriangleTable& t);
// Space separated, right-aligned per column.
std::string to_pretty(const riordan::TriangleTable& t);

}  // namespace typeb::io
