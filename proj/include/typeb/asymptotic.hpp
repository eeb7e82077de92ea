#pragma once

// Floating-point views of the exact asymptotic prefactor d_asym. The library
// stays exact; only these helpers touch e^{-1/2}, using MPFR at a working
// precision well above the requested output.

#include <string>

namespace typeb::seq {

// |d(r,n) / (n! d_asym(r,n) e^{-1/2}) - 1|, evaluated with `bits` of MPFR
// precision and rounded to double at the end.
double d_asym_relative_error(long r, long n, long bits = 256);

// n! d_asym(r,n) e^{-1/2} to `digits` significant decimal digits.
std::string d_asym_decimal(long r, long n, int digits = 30);

// |d(0,n) / (2^n n!) - 1/sqrt(e)|.
double chow_limit_gap(long n, long bits = 256);

}  // namespace typeb::seq
