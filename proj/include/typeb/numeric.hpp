#pragma once

// Exact integer/rational arithmetic and the combinatorial primitives every
// counting formula is built from. Values are GMP-backed; rationals are kept
// in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <string>

#include "typeb/errors.hpp"

namespace typeb {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

// num/den in lowest terms. Throws DomainError on a zero denominator.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

bool is_integral(const ExactRational& q);

// Throws ConsistencyError if q is not an integer; `what` names the caller.
ExactInt require_integral(const ExactRational& q, const std::string& what);

ExactInt factorial(long n);
ExactInt pow2(long e);
ExactRational pow2_signed(long e);  // 2^e for any integer e
ExactInt ipow(const ExactInt& base, unsigned long e);

// Generalized binomial a(a-1)...(a-n+1)/n! for any integer a. The result is
// always an integer but is returned as a rational. Throws DomainError if n < 0.
ExactRational binomial(long a, long n);

// Counting binomial: C(n, k) for n >= 0, zero when k < 0 or k > n.
ExactInt choose(long n, long k);

// Number of compositions of a into b positive parts. compositions(0, 0) = 1.
ExactInt compositions(long a, long b);

ExactInt falling_factorial(long n, long i);
ExactInt rising_factorial(long n, long j);

std::string to_string(const ExactInt& v);
std::string to_string(const ExactRational& q);

}  // namespace typeb
