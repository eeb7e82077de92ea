#pragma once

// Truncated formal power series over exact rationals.
//
// A series of order N stores coefficients 0..N. Coefficients past N are
// unknown, not zero: binary operations truncate to the smaller operand order
// and reading past the order throws TruncationError.

#include <cstddef>
#include <span>
#include <vector>

#include "typeb/numeric.hpp"

namespace typeb::fps {

inline constexpr std::size_t kDefaultOrder = 16;

class FormalPowerSeries {
 public:
  // Zero series of the given order.
  explicit FormalPowerSeries(std::size_t order);
  // Order is coeffs.size() - 1; coeffs must be non-empty.
  explicit FormalPowerSeries(std::vector<ExactRational> coeffs);

  static FormalPowerSeries constant(const ExactRational& c, std::size_t order);
  // The series z.
  static FormalPowerSeries variable(std::size_t order);
  // c_0 + c_1 z + ... from integers, padded with zeros up to `order`.
  static FormalPowerSeries polynomial(std::span<const long> coeffs,
                                      std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const ExactRational& operator[](std::size_t n) const;
  std::span<const ExactRational> coefficients() const { return coeffs_; }

  FormalPowerSeries truncated(std::size_t order) const;
  FormalPowerSeries derivative() const;
  // Antiderivative with zero constant term; order grows by one.
  FormalPowerSeries integral() const;
  // s(c z).
  FormalPowerSeries scaled_argument(const ExactRational& c) const;

  FormalPowerSeries operator-() const;
  FormalPowerSeries& operator+=(const FormalPowerSeries& o);
  FormalPowerSeries& operator-=(const FormalPowerSeries& o);
  FormalPowerSeries& operator*=(const ExactRational& c);

  friend FormalPowerSeries operator+(FormalPowerSeries a,
                                     const FormalPowerSeries& b) {
    return a += b;
  }
  friend FormalPowerSeries operator-(FormalPowerSeries a,
                                     const FormalPowerSeries& b) {
    return a -= b;
  }
  friend FormalPowerSeries operator*(FormalPowerSeries a,
                                     const ExactRational& c) {
    return a *= c;
  }
  friend FormalPowerSeries operator*(const FormalPowerSeries& a,
                                     const FormalPowerSeries& b);

  friend bool operator==(const FormalPowerSeries&,
                         const FormalPowerSeries&) = default;

 private:
  std::vector<ExactRational> coeffs_;
};

FormalPowerSeries series_mul(const FormalPowerSeries& a,
                             const FormalPowerSeries& b);
// 1/a; requires a(0) != 0.
FormalPowerSeries series_reciprocal(const FormalPowerSeries& a);
// a^k for any integer k; negative k requires a(0) != 0.
FormalPowerSeries series_pow(const FormalPowerSeries& a, long k);
// g(f(z)); requires f(0) == 0.
FormalPowerSeries series_compose(const FormalPowerSeries& g,
                                 const FormalPowerSeries& f);
// Compositional inverse; requires f(0) == 0 and f'(0) != 0.
FormalPowerSeries series_revert(const FormalPowerSeries& f);
// Requires g(0) == 1.
FormalPowerSeries series_log(const FormalPowerSeries& g);
// Requires f(0) == 0.
FormalPowerSeries series_exp(const FormalPowerSeries& f);

// n! [z^n] s.
ExactRational egf_coeff(const FormalPowerSeries& s, std::size_t n);

// Frequently used closed forms.
FormalPowerSeries geometric(const ExactRational& ratio, std::size_t order);  // 1/(1 - ratio z)
FormalPowerSeries exponential(const ExactRational& rate, std::size_t order);  // e^{rate z}
FormalPowerSeries neg_log_one_minus(const ExactRational& rate,
                                    std::size_t order);  // -ln(1 - rate z)

}  // namespace typeb::fps
