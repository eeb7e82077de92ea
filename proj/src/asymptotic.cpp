#include "typeb/asymptotic.hpp"

#include <mpfr.h>

#include <cmath>

#include "typeb/numeric.hpp"
#include "typeb/sequences.hpp"

namespace typeb::seq {

namespace {

class Real {
 public:
  explicit Real(long bits) { mpfr_init2(v_, bits); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void check_args(long r, long n, long bits) {
  if (r < 0 || n < 0) throw DomainError("r and n must be nonnegative");
  if (bits < MPFR_PREC_MIN || bits > 1L << 20) {
    throw DomainError("MPFR precision out of range");
  }
}

// out = n! * d_asym(r, n) * e^{-1/2}
void approximation(Real& out, long r, long n, long bits) {
  Real half(bits);
  mpfr_set_si(half.get(), -1, MPFR_RNDN);
  mpfr_div_ui(half.get(), half.get(), 2, MPFR_RNDN);
  mpfr_exp(half.get(), half.get(), MPFR_RNDN);
  const ExactRational prefactor = d_asym(r, n) * factorial(n);
  mpfr_set_q(out.get(), prefactor.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(out.get(), out.get(), half.get(), MPFR_RNDN);
}

}  // namespace

double d_asym_relative_error(long r, long n, long bits) {
  check_args(r, n, bits);
  Real approx(bits);
  approximation(approx, r, n, bits);
  Real exact(bits);
  const ExactInt d = d_rec(r, n);
  mpfr_set_z(exact.get(), d.get_mpz_t(), MPFR_RNDN);
  mpfr_div(exact.get(), exact.get(), approx.get(), MPFR_RNDN);
  mpfr_sub_ui(exact.get(), exact.get(), 1, MPFR_RNDN);
  mpfr_abs(exact.get(), exact.get(), MPFR_RNDN);
  return mpfr_get_d(exact.get(), MPFR_RNDN);
}

std::string d_asym_decimal(long r, long n, int digits) {
  if (digits < 1 || digits > 10000) throw DomainError("digits out of range");
  const long bits = static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 64;
  check_args(r, n, bits);
  Real approx(bits);
  approximation(approx, r, n, bits);
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*RNg", digits, approx.get());
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

double chow_limit_gap(long n, long bits) {
  check_args(0, n, bits);
  Real ratio(bits);
  const ExactRational q = make_rational(d_rec(0, n), pow2(n) * factorial(n));
  mpfr_set_q(ratio.get(), q.get_mpq_t(), MPFR_RNDN);
  Real limit(bits);
  mpfr_set_si(limit.get(), -1, MPFR_RNDN);
  mpfr_div_ui(limit.get(), limit.get(), 2, MPFR_RNDN);
  mpfr_exp(limit.get(), limit.get(), MPFR_RNDN);
  mpfr_sub(ratio.get(), ratio.get(), limit.get(), MPFR_RNDN);
  mpfr_abs(ratio.get(), ratio.get(), MPFR_RNDN);
  return mpfr_get_d(ratio.get(), MPFR_RNDN);
}

}  // namespace typeb::seq
