#pragma once

// Exponential Riordan arrays (g, f): the lower-triangular matrix whose k-th
// column has exponential generating function g(z) f(z)^k / k!.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "typeb/fps.hpp"
#include "typeb/numeric.hpp"

namespace typeb::riordan {

using fps::FormalPowerSeries;

class ExpRiordanArray {
 public:
  // Validates g(0) != 0, f(0) == 0, f'(0) != 0; order is the smaller of the
  // two series orders.
  ExpRiordanArray(FormalPowerSeries g, FormalPowerSeries f);

  static ExpRiordanArray identity(std::size_t order);

  const FormalPowerSeries& g() const { return g_; }
  const FormalPowerSeries& f() const { return f_; }
  std::size_t order() const { return g_.order(); }

  // n!/k! [z^n] g f^k; zero above the diagonal.
  ExactRational entry(std::size_t n, std::size_t k) const;

  friend bool operator==(const ExpRiordanArray&,
                         const ExpRiordanArray&) = default;

 private:
  FormalPowerSeries g_;
  FormalPowerSeries f_;
};

// Group product (g1 h(f1), l(f1)).
ExpRiordanArray multiply(const ExpRiordanArray& lhs, const ExpRiordanArray& rhs);
// (1/g(fbar), fbar) with fbar the compositional inverse of f.
ExpRiordanArray invert(const ExpRiordanArray& array);
// (g(-z), -f(-z)): entry (n, k) picks up the sign (-1)^{n+k}.
ExpRiordanArray unsigned_conjugate(const ExpRiordanArray& array);
// EGF of the array applied to the column vector with EGF h: g h(f).
FormalPowerSeries apply_fte(const ExpRiordanArray& array,
                            const FormalPowerSeries& h);

// A(t) = f'(fbar(t)) and Z(t) = g'(fbar(t)) / g(fbar(t)), order N - 1.
struct ProductionSequences {
  std::vector<ExactRational> a;
  std::vector<ExactRational> z;
};
ProductionSequences production_sequences(const ExpRiordanArray& array);

// Rows 0..rows-1 rebuilt only from the production sequences and l_{0,0}:
//   l_{n+1,k} = a_0 l_{n,k-1} + (1/k!) sum_{i>=k} i! (z_{i-k} + k a_{i-k+1}) l_{n,i}
// Needs rows - 1 <= sequence length.
std::vector<std::vector<ExactRational>> reconstruct_rows(
    const ProductionSequences& seqs, const ExactRational& corner,
    std::size_t rows);

// The r-Stirling array of type B with cycle order bound m >= 2:
//   m = 2: g = ((1+2z)/(1-2z))^r,  f = -ln(1-2z) - z
//   m > 2: g = ((1-z^{m-1})/(1-z) + 2^m z^{m-1}/(1-2z))^r,
//          f = -ln(1-2z) - sum_{k=1}^{m-1} (2^k-1) z^k / k
// Throws UnsupportedError for m < 2.
ExpRiordanArray make_triangle_B(int m, int r, std::size_t order);
// Same array built from the general-m expression even when m = 2.
ExpRiordanArray make_triangle_B_general(int m, int r, std::size_t order);

enum class Provenance { riordan, recurrence, oracle, explicit_formula };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

// Materialized integer triangle; row n holds columns 0..n.
struct TriangleTable {
  std::vector<std::vector<ExactInt>> rows;
  Provenance provenance = Provenance::recurrence;

  std::size_t size() const { return rows.size(); }
  // Zero above the diagonal.
  ExactInt at(std::size_t n, std::size_t k) const;

  friend bool operator==(const TriangleTable&, const TriangleTable&) = default;
};

// First `rows` rows of the array; throws ConsistencyError on a non-integer.
TriangleTable materialize(const ExpRiordanArray& array, std::size_t rows);

}  // namespace typeb::riordan
