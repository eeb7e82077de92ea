#pragma once

// Signed permutations of [n] in one-line notation and the exhaustive
// counting oracle that every formula in the library is checked against.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "typeb/numeric.hpp"

namespace typeb::perm {

// One position of a one-line signed permutation, or one entry of a cycle.
struct SignedValue {
  int value = 0;  // 1..n
  bool barred = false;

  friend bool operator==(const SignedValue&, const SignedValue&) = default;
};

class SignedPermutation {
 public:
  SignedPermutation() = default;
  // image[i] is sigma(i+1). Throws DomainError unless the absolute values
  // form a permutation of 1..n.
  explicit SignedPermutation(std::vector<SignedValue> image);
  // Compact form: -4 stands for 4-bar.
  static SignedPermutation from_signed(const std::vector<int>& one_line);
  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  // Image of i in 1..n.
  const SignedValue& operator()(int i) const { return image_.at(i - 1); }
  const std::vector<SignedValue>& image() const { return image_; }

  // One-line notation, barred values written with a leading '-'.
  std::string to_string() const;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;

 private:
  std::vector<SignedValue> image_;
};

struct Cycle {
  std::vector<SignedValue> entries;

  int ord() const { return static_cast<int>(entries.size()); }
  bool all_barred() const;
  // Cycles start at their minimal value, so this is "min <= r".
  bool contains_special(int r) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Cycles on absolute values; an entry x is barred when the one-line image
// that maps onto x is barred. Canonical: each cycle starts at its minimum
// and cycles are sorted by that minimum.
struct CycleDecomposition {
  std::vector<Cycle> cycles;

  std::size_t count() const { return cycles.size(); }
  std::string to_string() const;

  friend bool operator==(const CycleDecomposition&,
                         const CycleDecomposition&) = default;
};

CycleDecomposition cycle_decompose(const SignedPermutation& sigma);
SignedPermutation from_cycles(const CycleDecomposition& cycles);

// sigma(i) != i (unbarred) for every i.
bool is_derangement_B(const SignedPermutation& sigma);

enum class Mode { assoc, restr };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

// Every cycle has ord >= m (assoc) or ord <= m (restr), or is all-barred.
bool window_ok(const Cycle& cycle, Mode mode, int m);
// 1..r lie in pairwise distinct cycles.
bool specials_separated(const CycleDecomposition& cycles, int r);

// Largest size the enumerators accept. Defaults to 8, overridable through
// the TYPEB_ENUM_BOUND environment variable or set_enumeration_bound().
int enumeration_bound();
void set_enumeration_bound(int bound);
// Throws ResourceGuardError when size exceeds the bound.
void check_enumeration_size(int size);

// Calls visit once for each of the 2^n n! signed permutations of [n].
void enumerate_signed(int n,
                      const std::function<void(const SignedPermutation&)>& visit);

// Exhaustive counts over signed permutations of [n+r] whose specials 1..r
// are in distinct cycles and whose cycles all pass window_ok; entry k of the
// row counts those with exactly k + r cycles.
std::vector<ExactInt> oracle_row(int n, int r, Mode mode, int m);
ExactInt oracle_triangle(int n, int r, int k, Mode mode, int m);
ExactInt oracle_total(int n, int r, Mode mode, int m);

// Same counts computed through enumerate_signed and cycle_decompose; slow,
// kept as a cross-check of the bitmask enumerator behind oracle_row.
std::vector<ExactInt> oracle_row_reference(int n, int r, Mode mode, int m);

}  // namespace typeb::perm
