#include "typeb/fps.hpp"

#include <algorithm>
#include <string>

namespace typeb::fps {

FormalPowerSeries::FormalPowerSeries(std::size_t order)
    : coeffs_(order + 1, ExactRational(0)) {}

FormalPowerSeries::FormalPowerSeries(std::vector<ExactRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
}

FormalPowerSeries FormalPowerSeries::constant(const ExactRational& c,
                                              std::size_t order) {
  FormalPowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

FormalPowerSeries FormalPowerSeries::variable(std::size_t order) {
  FormalPowerSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

FormalPowerSeries FormalPowerSeries::polynomial(std::span<const long> coeffs,
                                                std::size_t order) {
  FormalPowerSeries s(order);
  for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) {
    s.coeffs_[i] = coeffs[i];
  }
  return s;
}

const ExactRational& FormalPowerSeries::operator[](std::size_t n) const {
  if (n > order()) {
    throw TruncationError("coefficient " + std::to_string(n) +
                          " requested from a series of order " +
                          std::to_string(order()));
  }
  return coeffs_[n];
}

FormalPowerSeries FormalPowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw TruncationError("cannot extend a series past its truncation order");
  }
  return FormalPowerSeries(
      std::vector<ExactRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

FormalPowerSeries FormalPowerSeries::derivative() const {
  if (order() == 0) return FormalPowerSeries(0);
  FormalPowerSeries d(order() - 1);
  for (std::size_t n = 1; n <= order(); ++n) {
    d.coeffs_[n - 1] = coeffs_[n] * static_cast<unsigned long>(n);
  }
  return d;
}

FormalPowerSeries FormalPowerSeries::integral() const {
  FormalPowerSeries s(order() + 1);
  for (std::size_t n = 0; n <= order(); ++n) {
    s.coeffs_[n + 1] = coeffs_[n] / static_cast<unsigned long>(n + 1);
  }
  return s;
}

FormalPowerSeries FormalPowerSeries::scaled_argument(
    const ExactRational& c) const {
  FormalPowerSeries s(*this);
  ExactRational p = 1;
  for (auto& coeff : s.coeffs_) {
    coeff *= p;
    p *= c;
  }
  return s;
}

FormalPowerSeries FormalPowerSeries::operator-() const {
  FormalPowerSeries s(*this);
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

FormalPowerSeries& FormalPowerSeries::operator+=(const FormalPowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FormalPowerSeries& FormalPowerSeries::operator-=(const FormalPowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FormalPowerSeries& FormalPowerSeries::operator*=(const ExactRational& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

FormalPowerSeries operator*(const FormalPowerSeries& a,
                            const FormalPowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  FormalPowerSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

FormalPowerSeries series_mul(const FormalPowerSeries& a,
                             const FormalPowerSeries& b) {
  return a * b;
}

FormalPowerSeries series_reciprocal(const FormalPowerSeries& a) {
  if (a[0] == 0) throw DomainError("reciprocal of a series with zero constant term");
  const std::size_t order = a.order();
  std::vector<ExactRational> inv(order + 1);
  const ExactRational lead = 1 / a[0];
  inv[0] = lead;
  for (std::size_t n = 1; n <= order; ++n) {
    ExactRational acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * inv[n - i];
    inv[n] = -acc * lead;
  }
  return FormalPowerSeries(std::move(inv));
}

FormalPowerSeries series_pow(const FormalPowerSeries& a, long k) {
  if (k < 0) {
    if (a[0] == 0) {
      throw DomainError("negative power of a series with zero constant term");
    }
    return series_pow(series_reciprocal(a), -k);
  }
  FormalPowerSeries result = FormalPowerSeries::constant(1, a.order());
  FormalPowerSeries base = a;
  for (unsigned long e = static_cast<unsigned long>(k); e != 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

FormalPowerSeries series_compose(const FormalPowerSeries& g,
                                 const FormalPowerSeries& f) {
  if (f[0] != 0) throw DomainError("composition needs f(0) = 0");
  const std::size_t order = std::min(g.order(), f.order());
  const FormalPowerSeries inner = f.truncated(order);
  // Horner: g_0 + f (g_1 + f (g_2 + ...)).
  FormalPowerSeries acc = FormalPowerSeries::constant(g[order], order);
  for (std::size_t i = order; i-- > 0;) {
    acc = acc * inner + FormalPowerSeries::constant(g[i], order);
  }
  return acc;
}

FormalPowerSeries series_revert(const FormalPowerSeries& f) {
  if (f.order() < 1) throw DomainError("reversion needs order >= 1");
  if (f[0] != 0) throw DomainError("reversion needs f(0) = 0");
  if (f[1] == 0) throw DomainError("reversion needs f'(0) != 0");
  const std::size_t order = f.order();
  const ExactRational inv_lead = 1 / f[1];
  std::vector<ExactRational> g(order + 1, ExactRational(0));
  g[1] = inv_lead;
  // [z^n] f(g) = f_1 g_n + (terms in g_1..g_{n-1}); solve for g_n.
  for (std::size_t n = 2; n <= order; ++n) {
    const FormalPowerSeries partial(
        std::vector<ExactRational>(g.begin(), g.begin() + n + 1));
    const FormalPowerSeries fg = series_compose(f.truncated(n), partial);
    g[n] = -fg[n] * inv_lead;
  }
  return FormalPowerSeries(std::move(g));
}

FormalPowerSeries series_log(const FormalPowerSeries& g) {
  if (g[0] != 1) throw DomainError("log needs g(0) = 1");
  if (g.order() == 0) return FormalPowerSeries(0);
  const FormalPowerSeries quotient =
      g.derivative() * series_reciprocal(g.truncated(g.order() - 1));
  return quotient.integral();
}

FormalPowerSeries series_exp(const FormalPowerSeries& f) {
  if (f[0] != 0) throw DomainError("exp needs f(0) = 0");
  const std::size_t order = f.order();
  // e' = f' e  =>  n e_n = sum_{k=1}^{n} k f_k e_{n-k}.
  std::vector<ExactRational> e(order + 1, ExactRational(0));
  e[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    ExactRational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += f[k] * e[n - k] * static_cast<unsigned long>(k);
    }
    e[n] = acc / static_cast<unsigned long>(n);
  }
  return FormalPowerSeries(std::move(e));
}

ExactRational egf_coeff(const FormalPowerSeries& s, std::size_t n) {
  return s[n] * factorial(static_cast<long>(n));
}

FormalPowerSeries geometric(const ExactRational& ratio, std::size_t order) {
  std::vector<ExactRational> c(order + 1);
  ExactRational p = 1;
  for (auto& x : c) {
    x = p;
    p *= ratio;
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries exponential(const ExactRational& rate, std::size_t order) {
  std::vector<ExactRational> c(order + 1);
  ExactRational term = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    c[n] = term;
    term *= rate;
    term /= static_cast<unsigned long>(n + 1);
  }
  return FormalPowerSeries(std::move(c));
}

FormalPowerSeries neg_log_one_minus(const ExactRational& rate,
                                    std::size_t order) {
  std::vector<ExactRational> c(order + 1, ExactRational(0));
  ExactRational p = rate;
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = p / static_cast<unsigned long>(n);
    p *= rate;
  }
  return FormalPowerSeries(std::move(c));
}

}  // namespace typeb::fps
