#pragma once

// Closed forms, recurrences and generating-function extractions for the
// type B r-Stirling family, the r-derangement counts d(r, n) and their
// relatives. Every function is deterministic; recurrences are memoized in
// thread-local tables, so calls are safe from any thread.
//
// Indexing convention: d(r, n) counts type B r-derangements on [n+r] (r
// special elements first); triangle values are indexed (n, k, r) with k+r
// cycles in total.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "typeb/numeric.hpp"
#include "typeb/permcore.hpp"

namespace typeb::seq {

using perm::Mode;

// Partitions of an n-set into k linearly ordered blocks: (n!/k!) C(n-1, k-1).
ExactInt lah(long n, long k);

// Unsigned Stirling numbers of the first kind, classic recurrence.
ExactInt stirling1(long n, long k);
// Type A r-Stirling numbers of the first kind: permutations of [n+r] with
// k+r cycles and 1..r in distinct cycles.
ExactInt r_stirling1(long n, long k, long r);

// Column 0 of the m = 2 triangle: 2^n n! sum_j C(r,j) C(n-1, r-j-1) 2^{r-j}.
ExactInt triangle_ge2_column0(long n, long r);
// Column 0 via the Lah-number sum sum_j C(r,j) 2^{n+r-j} (r-j)! L(n, r-j).
ExactInt triangle_ge2_column0_lah(long n, long r);
// r-Stirling numbers of type B (all cycles of order >= 2 or all-barred),
// through the recurrence on the last non-special element.
ExactInt triangle_ge2_rec(long n, long k, long r);
// The same recurrence regrouped with the j = 0 special term split off.
ExactInt triangle_ge2_rec_regrouped(long n, long k, long r);
// r = 0 only: the three-term recurrence
//   T(n+1,k) = 2n T(n,k) + 2n T(n-1,k-1) + T(n,k-1).
ExactInt triangle_ge2_r0_rec(long n, long k);

// Compositions of a into b positive parts of size <= c (inclusion-exclusion)
// and of size >= c (shifted binomial).
ExactInt par_le(long a, long b, long c);
ExactInt par_ge(long a, long b, long c);

// m-associated r-Stirling numbers of type B. m = 2 dispatches to
// triangle_ge2_rec, m > 2 uses the tau-weighted recurrence. For m in {0, 1}
// only column 0 is provided (2^{n+r} n! C(n+r-1, r-1)); other columns throw
// UnsupportedError.
ExactInt triangle_gem_rec(long n, long k, long r, long m);
ExactInt triangle_gem_column0(long n, long r, long m);

// d(r, n), four independent routes.
ExactInt chow(long n);  // d(0, n) = n! sum_k (-1)^k 2^{n-k} / k!
ExactInt d_rec(long r, long n);
ExactInt d_explicit(long r, long n);
std::vector<ExactInt> d_egf(long r, std::size_t max_n);

// Polynomial in r with integer coefficients, lowest degree first.
struct RPolynomial {
  std::vector<ExactInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  ExactInt evaluate(long r) const;
  std::string to_string() const;

  friend bool operator==(const RPolynomial&, const RPolynomial&) = default;
};
// d(r, n) as a polynomial in r, interpolated from r = 0..n.
RPolynomial d_poly(long n);

// Exact rational prefactor of the large-n approximation
//   d(r, n) / n!  ~  e^{-1/2} (-2)^n sum_i C(r,i) 2^i [C(-i-1,n) - (2i-1)/2 C(-i,n)].
ExactRational d_asym(long r, long n);

// Vertices of Z^r at l1-distance n from the origin: [x^n] ((1+x)/(1-x))^r.
ExactInt lattice_s(long r, long n);

struct Diagonals {
  ExactInt first;   // T(n+1, n)
  ExactInt second;  // T(n+2, n)

  friend bool operator==(const Diagonals&, const Diagonals&) = default;
};
// m = 2 closed forms 2(n+1)(n+2r) and (4/3) C(n+2,2)(3n^2+n+12nr+12r^2).
Diagonals diagonals_ge2(long n, long r);
// Kronecker-delta forms valid for every m >= 1.
Diagonals diagonals(long n, long r, long m);

// Unsigned inverse of the m = 2 triangle, via its production recurrence
//   T(n+1,k) = T(n,k-1) + (1/k!) sum_{i=k}^{n} i! 2^{i-k+2} ((i-k+1) r + k) T(n,i)
// with T(0,0) = 1 and column 0 taken from the k = 0 instance.
ExactInt inverse_triangle_rec(long n, long k, long r);

// Colored plane increasing trees on n+1 vertices: n! [z^n] F'(z).
ExactInt tree_count(long n);

// Restricted (cycles <= m) and associated (cycles >= m) type A Stirling
// numbers of the first kind and their row sums.
ExactInt stirling_a(long n, long k, Mode mode, long m);
ExactInt incomplete_factorial(long n, Mode mode, long m);
// Type B restricted/associated factorials by binomial convolution of type A
// incomplete factorials.
ExactInt typeB_factorial_conv(long n, Mode mode, long m);

enum class HowardVariant {
  type_a,          // [n, n-k] = sum_l C(n, 2k-l) [2k-l, k-l]_{>=2}
  general,         // m-associated r-Stirling B via cycles of size exactly m
  general_closed,  // the same identity in its n!-normalized form
  r_zero,          // general with r = 0
  m_one,           // all signed r-permutations via fixed points + m = 2
  m_one_r_zero,    // m_one with r = 0
};

std::string to_string(HowardVariant v);
HowardVariant howard_variant_from_string(const std::string& s);

struct HowardSides {
  ExactInt lhs;
  ExactInt rhs;
};
// Evaluates both sides of the selected identity from independent routes.
// Parameters a variant does not use are ignored (type_a uses n, k; the
// r-free variants ignore r; m_one variants ignore m).
HowardSides howard_check(long n, long k, long r, long m, HowardVariant variant);

}  // namespace typeb::seq
