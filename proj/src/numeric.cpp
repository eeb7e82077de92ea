#include "typeb/numeric.hpp"

namespace typeb {

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integral(const ExactRational& q) { return q.get_den() == 1; }

ExactInt require_integral(const ExactRational& q, const std::string& what) {
  if (!is_integral(q)) {
    throw ConsistencyError(what + ": expected an integer, got " + to_string(q));
  }
  return q.get_num();
}

ExactInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInt pow2(long e) {
  if (e < 0) throw DomainError("pow2 with negative exponent");
  ExactInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

ExactRational pow2_signed(long e) {
  if (e >= 0) return ExactRational(pow2(e));
  return make_rational(1, pow2(-e));
}

ExactInt ipow(const ExactInt& base, unsigned long e) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

ExactRational binomial(long a, long n) {
  if (n < 0) throw DomainError("binomial with negative lower index");
  return make_rational(falling_factorial(a, n), factorial(n));
}

ExactInt choose(long n, long k) {
  if (n < 0) throw DomainError("choose with negative upper index");
  if (k < 0 || k > n) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

ExactInt compositions(long a, long b) {
  if (b < 0 || a < 0) return 0;
  if (b == 0) return a == 0 ? 1 : 0;
  if (a < b) return 0;
  return choose(a - 1, b - 1);
}

ExactInt falling_factorial(long n, long i) {
  if (i < 0) throw DomainError("falling factorial with negative length");
  ExactInt r = 1;
  for (long t = 0; t < i; ++t) r *= n - t;
  return r;
}

ExactInt rising_factorial(long n, long j) {
  if (j < 0) throw DomainError("rising factorial with negative length");
  ExactInt r = 1;
  for (long t = 0; t < j; ++t) r *= n + t;
  return r;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

std::string to_string(const ExactRational& q) { return q.get_str(); }

}  // namespace typeb
