#include "typeb/sequences.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "typeb/fps.hpp"
#include "typeb/riordan.hpp"

namespace typeb::seq {

namespace {

template <std::size_t N>
class Memo {
 public:
  using Key = std::array<long, N>;

  template <class Compute>
  ExactInt get(const Key& key, Compute&& compute) {
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    ExactInt value = compute();
    table_.emplace(key, value);
    return value;
  }

 private:
  std::map<Key, ExactInt> table_;
};

void require_nonnegative(long v, const char* name) {
  if (v < 0) throw DomainError(std::string(name) + " must be nonnegative");
}

// n!/(n-j)! for 0 <= j <= n.
ExactInt arrangements(long n, long j) { return falling_factorial(n, j); }

}  // namespace

ExactInt lah(long n, long k) {
  require_nonnegative(n, "n");
  if (n == 0) return k == 0 ? 1 : 0;
  if (k <= 0 || k > n) return 0;
  return factorial(n) / factorial(k) * choose(n - 1, k - 1);
}

ExactInt stirling1(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  thread_local Memo<2> memo;
  return memo.get({n, k}, [&] {
    return ExactInt(stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k));
  });
}

ExactInt r_stirling1(long n, long k, long r) {
  require_nonnegative(r, "r");
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  thread_local Memo<3> memo;
  return memo.get({n, k, r}, [&] {
    return ExactInt(r_stirling1(n - 1, k - 1, r) +
                    (n - 1 + r) * r_stirling1(n - 1, k, r));
  });
}

ExactInt triangle_ge2_column0(long n, long r) {
  require_nonnegative(n, "n");
  require_nonnegative(r, "r");
  if (n == 0) return 1;
  ExactInt sum = 0;
  for (long j = 0; j <= r; ++j) {
    sum += choose(r, j) * choose(n - 1, r - j - 1) * pow2(r - j);
  }
  return pow2(n) * factorial(n) * sum;
}

ExactInt triangle_ge2_column0_lah(long n, long r) {
  require_nonnegative(n, "n");
  require_nonnegative(r, "r");
  ExactInt sum = 0;
  for (long j = 0; j <= r; ++j) {
    sum += choose(r, j) * pow2(n + r - j) * factorial(r - j) * lah(n, r - j);
  }
  return sum;
}

ExactInt triangle_ge2_rec(long n, long k, long r) {
  require_nonnegative(r, "r");
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return triangle_ge2_column0(n, r);
  thread_local Memo<3> memo;
  return memo.get({n, k, r}, [&] {
    const long prev = n - 1;
    ExactInt value = triangle_ge2_rec(prev, k - 1, r);
    ExactInt own = 0;
    for (long j = 1; j <= prev; ++j) {
      own += arrangements(prev, j) * pow2(j) * triangle_ge2_rec(prev - j, k - 1, r);
    }
    value += 2 * own;
    if (r > 0) {
      ExactInt special = 0;
      for (long j = 0; j <= prev; ++j) {
        special += arrangements(prev, j) * (j + 1) * pow2(j) *
                   triangle_ge2_rec(prev - j, k, r - 1);
      }
      value += 4 * r * special;
    }
    return value;
  });
}

ExactInt triangle_ge2_rec_regrouped(long n, long k, long r) {
  require_nonnegative(r, "r");
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return triangle_ge2_column0(n, r);
  thread_local Memo<3> memo;
  return memo.get({n, k, r}, [&] {
    const long prev = n - 1;
    ExactInt value = triangle_ge2_rec_regrouped(prev, k - 1, r);
    if (r > 0) value += 4 * r * triangle_ge2_rec_regrouped(prev, k, r - 1);
    ExactInt tail = 0;
    for (long j = 1; j <= prev; ++j) {
      ExactInt inner = triangle_ge2_rec_regrouped(prev - j, k - 1, r);
      if (r > 0) {
        inner += 2 * r * (j + 1) * triangle_ge2_rec_regrouped(prev - j, k, r - 1);
      }
      tail += arrangements(prev, j) * pow2(j - 1) * inner;
    }
    value += 4 * tail;
    return value;
  });
}

ExactInt triangle_ge2_r0_rec(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  thread_local Memo<2> memo;
  return memo.get({n, k}, [&] {
    const long prev = n - 1;
    return ExactInt(2 * prev * triangle_ge2_r0_rec(prev, k) +
                    2 * prev * triangle_ge2_r0_rec(prev - 1, k - 1) +
                    triangle_ge2_r0_rec(prev, k - 1));
  });
}

ExactInt par_le(long a, long b, long c) {
  if (b < 0) return 0;
  if (c <= 0 && (a != 0 || b != 0)) return 0;
  ExactInt sum = 0;
  for (long i = 0; i <= b; ++i) {
    const ExactInt term = choose(b, i) * compositions(a - c * i, b);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

ExactInt par_ge(long a, long b, long c) {
  // Parts are positive, so a lower bound below 1 is no constraint.
  const long lower = std::max(c, 1L);
  return compositions(a - (lower - 1) * b, b);
}

ExactInt triangle_gem_column0(long n, long r, long m) {
  require_nonnegative(n, "n");
  require_nonnegative(r, "r");
  if (m <= 1) return pow2(n + r) * rising_factorial(r, n);
  if (m == 2) return triangle_ge2_column0(n, r);
  // r-p specials sit alone (barred); j of the remaining p cycles are short
  // and fully barred, the other p-j have order >= m and free colours.
  ExactInt sum = 0;
  for (long p = 0; p <= r; ++p) {
    for (long j = 0; j <= p; ++j) {
      const ExactInt outer = choose(r, p) * choose(p, j);
      for (long k = 0; k <= n; ++k) {
        const ExactInt ways = par_le(k, j, m - 2) * par_ge(n - k, p - j, m - 1);
        if (ways == 0) continue;
        sum += outer * pow2(n + p - k - j) * ways;
      }
    }
  }
  return factorial(n) * sum;
}

ExactInt triangle_gem_rec(long n, long k, long r, long m) {
  require_nonnegative(r, "r");
  if (m < 0) throw DomainError("m must be nonnegative");
  if (m == 2) return triangle_ge2_rec(n, k, r);
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return triangle_gem_column0(n, r, m);
  if (m <= 1) {
    throw UnsupportedError(
        "triangle_gem_rec: for m <= 1 only column 0 has a closed form");
  }
  thread_local Memo<4> memo;
  return memo.get({n, k, r, m}, [&] {
    const long prev = n - 1;
    // 2^{j+1} colourings once a cycle reaches order m, otherwise all-barred.
    const auto tau = [m](long upper, long j) -> ExactInt {
      return (m - 1 <= j && j <= upper) ? pow2(j + 1) : ExactInt(1);
    };
    ExactInt value = 0;
    for (long j = 0; j <= prev; ++j) {
      value += factorial(j) * tau(prev, j) * choose(prev, j) *
               triangle_gem_rec(prev - j, k - 1, r, m);
    }
    if (r > 0) {
      ExactInt special = 0;
      for (long j = 0; j <= prev; ++j) {
        special += factorial(j + 1) * tau(prev + 1, j + 1) * choose(prev, j) *
                   triangle_gem_rec(prev - j, k, r - 1, m);
      }
      value += r * special;
    }
    return value;
  });
}

ExactInt chow(long n) {
  require_nonnegative(n, "n");
  const ExactInt n_fact = factorial(n);
  ExactInt sum = 0;
  for (long k = 0; k <= n; ++k) {
    const ExactInt term = n_fact / factorial(k) * pow2(n - k);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

ExactInt d_rec(long r, long n) {
  require_nonnegative(r, "r");
  require_nonnegative(n, "n");
  if (n == 0) return 1;
  if (r == 0) return chow(n);
  thread_local Memo<2> memo;
  return memo.get({r, n}, [&] {
    return ExactInt(d_rec(r - 1, n) + 2 * n * d_rec(r, n - 1) +
                    2 * n * d_rec(r - 1, n - 1));
  });
}

ExactInt d_explicit(long r, long n) {
  require_nonnegative(r, "r");
  require_nonnegative(n, "n");
  ExactRational outer = 0;
  for (long i = 0; i <= std::min(r, n); ++i) {
    ExactRational inner = 0;
    for (long k = 0; k <= n - i; ++k) {
      ExactRational term(choose(n - i, k) * rising_factorial(i + 1, n - i - k));
      term /= pow2(k);
      if (k % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    outer += choose(r, i) * falling_factorial(n, i) * pow2(i) * inner;
  }
  return require_integral(outer * pow2(n), "d_explicit");
}

std::vector<ExactInt> d_egf(long r, std::size_t max_n) {
  require_nonnegative(r, "r");
  using fps::FormalPowerSeries;
  const std::size_t order = std::max<std::size_t>(max_n, 1);
  const long one_plus[] = {1, 2};
  const long one_minus[] = {1, -2};
  const FormalPowerSeries denom =
      fps::series_reciprocal(FormalPowerSeries::polynomial(one_minus, order));
  const FormalPowerSeries ratio =
      FormalPowerSeries::polynomial(one_plus, order) * denom;
  const FormalPowerSeries egf =
      fps::exponential(-1, order) * denom * fps::series_pow(ratio, r);
  std::vector<ExactInt> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    out.push_back(require_integral(fps::egf_coeff(egf, n), "d_egf"));
  }
  return out;
}

ExactInt RPolynomial::evaluate(long r) const {
  ExactInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + *it;
  return acc;
}

std::string RPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    const ExactInt& c = coeffs[d];
    if (c == 0) continue;
    ExactInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) os << mag.get_str();
    if (d >= 1) os << 'r';
    if (d >= 2) os << '^' << d;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

RPolynomial d_poly(long n) {
  require_nonnegative(n, "n");
  // Newton forward differences at r = 0, then expand the falling-factorial
  // basis C(r, j) into monomials.
  std::vector<ExactInt> diffs;
  for (long r = 0; r <= n; ++r) diffs.push_back(d_rec(r, n));
  std::vector<ExactInt> newton;
  for (long j = 0; j <= n; ++j) {
    newton.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
      diffs[i] = diffs[i + 1] - diffs[i];
    }
    diffs.pop_back();
  }
  std::vector<ExactRational> coeffs(n + 1, ExactRational(0));
  std::vector<ExactRational> basis{ExactRational(1)};  // C(r, j) in monomials
  for (long j = 0; j <= n; ++j) {
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += newton[j] * basis[d];
    // C(r, j+1) = C(r, j) (r - j) / (j + 1).
    std::vector<ExactRational> next(basis.size() + 1, ExactRational(0));
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * j;
    }
    for (auto& c : next) c /= j + 1;
    basis = std::move(next);
  }
  RPolynomial poly;
  for (const auto& c : coeffs) poly.coeffs.push_back(require_integral(c, "d_poly"));
  while (poly.coeffs.size() > 1 && poly.coeffs.back() == 0) poly.coeffs.pop_back();
  return poly;
}

ExactRational d_asym(long r, long n) {
  require_nonnegative(r, "r");
  require_nonnegative(n, "n");
  ExactRational sum = 0;
  for (long i = 0; i <= r; ++i) {
    const ExactRational bracket =
        binomial(-i - 1, n) - make_rational(2 * i - 1, 2) * binomial(-i, n);
    sum += choose(r, i) * pow2(i) * bracket;
  }
  ExactInt scale = pow2(n);
  if (n % 2 == 1) scale = -scale;
  return sum * scale;
}

ExactInt lattice_s(long r, long n) {
  require_nonnegative(r, "r");
  require_nonnegative(n, "n");
  using fps::FormalPowerSeries;
  const std::size_t order = static_cast<std::size_t>(std::max(n, 1L));
  const long one_plus[] = {1, 1};
  const long one_minus[] = {1, -1};
  const FormalPowerSeries ratio =
      FormalPowerSeries::polynomial(one_plus, order) *
      fps::series_reciprocal(FormalPowerSeries::polynomial(one_minus, order));
  return require_integral(fps::series_pow(ratio, r)[n], "lattice_s");
}

Diagonals diagonals_ge2(long n, long r) {
  require_nonnegative(n, "n");
  require_nonnegative(r, "r");
  Diagonals d;
  d.first = 2 * (n + 1) * ExactInt(n + 2 * r);
  const ExactRational second =
      make_rational(4, 3) * choose(n + 2, 2) *
      ExactInt(3 * n * n + n + 12 * n * r + 12 * r * r);
  d.second = require_integral(second, "diagonals_ge2");
  return d;
}

Diagonals diagonals(long n, long r, long m) {
  require_nonnegative(n, "n");
  require_nonnegative(r, "r");
  if (m < 1) throw DomainError("diagonal closed forms need m >= 1");
  const long is1 = m == 1, is2 = m == 2, is3 = m == 3;
  Diagonals d;
  d.first = require_integral(pow2_signed((n + r + 1) * is1 + 2 * is2 - 1) *
                                 ((n + 1) * ExactInt(n + 2 * r)),
                             "diagonals first");
  const ExactInt bracket =
      3 * pow2(4 * is2) * ExactInt(4 * r * (r + n - 1) + n * (n - 1)) +
      pow2(3 * (is2 + is3) + 3) * ExactInt(n + 3 * r);
  const ExactRational second =
      ExactRational(pow2((n + r + 2) * is1)) / 12 * choose(n + 2, 2) * bracket;
  d.second = require_integral(second, "diagonals second");
  return d;
}

ExactInt inverse_triangle_rec(long n, long k, long r) {
  require_nonnegative(r, "r");
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  thread_local Memo<3> memo;
  return memo.get({n, k, r}, [&] {
    const long prev = n - 1;
    ExactInt sum = 0;
    for (long i = k; i <= prev; ++i) {
      sum += factorial(i) * pow2(i - k + 2) * ExactInt((i - k + 1) * r + k) *
             inverse_triangle_rec(prev, i, r);
    }
    const ExactRational scaled = make_rational(sum, factorial(k));
    return ExactInt(inverse_triangle_rec(prev, k - 1, r) +
                    require_integral(scaled, "inverse_triangle_rec"));
  });
}

ExactInt tree_count(long n) {
  require_nonnegative(n, "n");
  const std::size_t order = static_cast<std::size_t>(n) + 1;
  const riordan::ExpRiordanArray unsigned_inverse = riordan::unsigned_conjugate(
      riordan::invert(riordan::make_triangle_B(2, 0, order)));
  const fps::FormalPowerSeries derivative = unsigned_inverse.f().derivative();
  return require_integral(fps::egf_coeff(derivative, static_cast<std::size_t>(n)),
                          "tree_count");
}

ExactInt stirling_a(long n, long k, Mode mode, long m) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  thread_local Memo<4> memo;
  return memo.get({n, k, static_cast<long>(mode), m}, [&] {
    // i counts the other elements in the cycle of element n.
    const long lo = mode == Mode::restr ? 0 : std::max(m - 1, 0L);
    const long hi = mode == Mode::restr ? std::min(m - 1, n - 1) : n - 1;
    ExactInt sum = 0;
    for (long i = lo; i <= hi; ++i) {
      sum += arrangements(n - 1, i) * stirling_a(n - i - 1, k - 1, mode, m);
    }
    return sum;
  });
}

ExactInt incomplete_factorial(long n, Mode mode, long m) {
  require_nonnegative(n, "n");
  ExactInt sum = 0;
  for (long k = 0; k <= n; ++k) sum += stirling_a(n, k, mode, m);
  return sum;
}

ExactInt typeB_factorial_conv(long n, Mode mode, long m) {
  require_nonnegative(n, "n");
  // Cycles inside the window take any colouring; the others are all-barred
  // and contribute like uncoloured type A cycles of the complementary kind.
  ExactInt sum = 0;
  for (long i = 0; i <= n; ++i) {
    const ExactInt colored = incomplete_factorial(i, mode, m);
    const ExactInt barred =
        mode == Mode::assoc ? incomplete_factorial(n - i, Mode::restr, m - 1)
                            : incomplete_factorial(n - i, Mode::assoc, m + 1);
    sum += choose(n, i) * pow2(i) * colored * barred;
  }
  return sum;
}

namespace {

// m-associated r-Stirling number of type B for any m >= 1.
ExactInt associated_b(long n, long k, long r, long m) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (m == 1) return pow2(n + r) * r_stirling1(n, k, r);
  return triangle_gem_rec(n, k, r, m);
}

ExactInt howard_type_a_rhs(long n, long k) {
  ExactInt sum = 0;
  for (long l = 0; l <= k; ++l) {
    if (2 * k - l > n) continue;
    sum += choose(n, 2 * k - l) * stirling_a(2 * k - l, k - l, Mode::assoc, 2);
  }
  return sum;
}

ExactInt howard_general_rhs(long n, long k, long r, long m) {
  ExactRational sum = 0;
  const ExactInt colours = pow2(m) - 1;
  for (long p = 0; p <= r; ++p) {
    for (long l = 0; l <= k; ++l) {
      const long rest = n - m * l - (m - 1) * p;
      if (rest < 0) continue;
      const ExactInt numer = choose(n, m * l) * choose(r, p) *
                             choose(n - m * l, (m - 1) * p) *
                             ipow(colours, static_cast<unsigned long>(l + p)) *
                             factorial(m * l) * factorial((m - 1) * p);
      const ExactInt denom = ipow(ExactInt(m), static_cast<unsigned long>(l)) *
                             factorial(l);
      sum += make_rational(numer * associated_b(rest, k - l, r - p, m + 1), denom);
    }
  }
  return require_integral(sum, "howard general");
}

ExactInt howard_general_closed_rhs(long n, long k, long r, long m) {
  ExactRational sum = 0;
  const ExactInt colours = pow2(m) - 1;
  for (long p = 0; p <= r; ++p) {
    for (long l = 0; l <= k; ++l) {
      const long rest = n - m * (l + p) + p;
      if (rest < 0) continue;
      const ExactInt numer =
          choose(r, p) * ipow(colours, static_cast<unsigned long>(l + p));
      const ExactInt denom = ipow(ExactInt(m), static_cast<unsigned long>(l)) *
                             factorial(l) * factorial(rest);
      sum += make_rational(numer * associated_b(rest, k - l, r - p, m + 1), denom);
    }
  }
  return require_integral(sum * factorial(n), "howard general closed");
}

ExactInt howard_m_one_rhs(long n, long k, long r) {
  ExactInt sum = 0;
  for (long p = 0; p <= r; ++p) {
    for (long l = 0; l <= k; ++l) {
      if (l > n) continue;
      sum += choose(r, p) * choose(n, l) * triangle_ge2_rec(n - l, k - l, r - p);
    }
  }
  return sum;
}

}  // namespace

std::string to_string(HowardVariant v) {
  switch (v) {
    case HowardVariant::type_a: return "type-a";
    case HowardVariant::general: return "general";
    case HowardVariant::general_closed: return "general-closed";
    case HowardVariant::r_zero: return "r-zero";
    case HowardVariant::m_one: return "m-one";
    case HowardVariant::m_one_r_zero: return "m-one-r-zero";
  }
  return "unknown";
}

HowardVariant howard_variant_from_string(const std::string& s) {
  for (auto v : {HowardVariant::type_a, HowardVariant::general,
                 HowardVariant::general_closed, HowardVariant::r_zero,
                 HowardVariant::m_one, HowardVariant::m_one_r_zero}) {
    if (to_string(v) == s) return v;
  }
  throw DomainError("unknown identity variant '" + s + "'");
}

HowardSides howard_check(long n, long k, long r, long m, HowardVariant variant) {
  require_nonnegative(n, "n");
  require_nonnegative(k, "k");
  require_nonnegative(r, "r");
  switch (variant) {
    case HowardVariant::type_a:
      return {stirling1(n, n - k), howard_type_a_rhs(n, k)};
    case HowardVariant::general:
    case HowardVariant::general_closed:
    case HowardVariant::r_zero: {
      if (m < 1) throw DomainError("identity needs m >= 1");
      const long rr = variant == HowardVariant::r_zero ? 0 : r;
      const ExactInt rhs = variant == HowardVariant::general_closed
                               ? howard_general_closed_rhs(n, k, rr, m)
                               : howard_general_rhs(n, k, rr, m);
      return {associated_b(n, k, rr, m), rhs};
    }
    case HowardVariant::m_one:
      return {pow2(n + r) * r_stirling1(n, k, r), howard_m_one_rhs(n, k, r)};
    case HowardVariant::m_one_r_zero:
      return {pow2(n) * stirling1(n, k), howard_m_one_rhs(n, k, 0)};
  }
  throw DomainError("unknown identity variant");
}

}  // namespace typeb::seq
