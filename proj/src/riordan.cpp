#include "typeb/riordan.hpp"

#include <algorithm>
#include <string>

namespace typeb::riordan {

using fps::series_compose;
using fps::series_pow;
using fps::series_reciprocal;
using fps::series_revert;

namespace {

FormalPowerSeries negated_argument(const FormalPowerSeries& s) {
  return s.scaled_argument(-1);
}

}  // namespace

ExpRiordanArray::ExpRiordanArray(FormalPowerSeries g, FormalPowerSeries f)
    : g_(std::move(g)), f_(std::move(f)) {
  const std::size_t order = std::min(g_.order(), f_.order());
  if (order < 1) throw DomainError("Riordan array needs order >= 1");
  g_ = g_.truncated(order);
  f_ = f_.truncated(order);
  if (g_[0] == 0) throw DomainError("Riordan array needs g(0) != 0");
  if (f_[0] != 0) throw DomainError("Riordan array needs f(0) = 0");
  if (f_[1] == 0) throw DomainError("Riordan array needs f'(0) != 0");
}

ExpRiordanArray ExpRiordanArray::identity(std::size_t order) {
  return ExpRiordanArray(FormalPowerSeries::constant(1, order),
                         FormalPowerSeries::variable(order));
}

ExactRational ExpRiordanArray::entry(std::size_t n, std::size_t k) const {
  if (n > order() || k > order()) {
    throw TruncationError("entry (" + std::to_string(n) + ", " +
                          std::to_string(k) + ") beyond array order " +
                          std::to_string(order()));
  }
  if (k > n) return 0;
  const FormalPowerSeries column = g_ * series_pow(f_, static_cast<long>(k));
  return column[n] * factorial(static_cast<long>(n)) /
         factorial(static_cast<long>(k));
}

ExpRiordanArray multiply(const ExpRiordanArray& lhs,
                         const ExpRiordanArray& rhs) {
  return ExpRiordanArray(lhs.g() * series_compose(rhs.g(), lhs.f()),
                         series_compose(rhs.f(), lhs.f()));
}

ExpRiordanArray invert(const ExpRiordanArray& array) {
  const FormalPowerSeries fbar = series_revert(array.f());
  return ExpRiordanArray(series_reciprocal(series_compose(array.g(), fbar)),
                         fbar);
}

ExpRiordanArray unsigned_conjugate(const ExpRiordanArray& array) {
  return ExpRiordanArray(negated_argument(array.g()),
                         -negated_argument(array.f()));
}

FormalPowerSeries apply_fte(const ExpRiordanArray& array,
                            const FormalPowerSeries& h) {
  return array.g() * series_compose(h, array.f());
}

ProductionSequences production_sequences(const ExpRiordanArray& array) {
  const std::size_t order = array.order() - 1;
  const FormalPowerSeries fbar = series_revert(array.f()).truncated(order);
  const FormalPowerSeries a = series_compose(array.f().derivative(), fbar);
  const FormalPowerSeries log_deriv =
      array.g().derivative() * series_reciprocal(array.g().truncated(order));
  const FormalPowerSeries z = series_compose(log_deriv, fbar);
  ProductionSequences out;
  out.a.assign(a.coefficients().begin(), a.coefficients().end());
  out.z.assign(z.coefficients().begin(), z.coefficients().end());
  return out;
}

std::vector<std::vector<ExactRational>> reconstruct_rows(
    const ProductionSequences& seqs, const ExactRational& corner,
    std::size_t rows) {
  if (rows == 0) return {};
  if (rows - 1 > seqs.a.size() || rows - 1 > seqs.z.size()) {
    throw TruncationError("production sequences too short for requested rows");
  }
  std::vector<std::vector<ExactRational>> l(rows);
  l[0] = {corner};
  for (std::size_t n = 0; n + 1 < rows; ++n) {
    std::vector<ExactRational>& next = l[n + 1];
    next.assign(n + 2, ExactRational(0));
    for (std::size_t k = 0; k <= n + 1; ++k) {
      ExactRational acc = 0;
      for (std::size_t i = k; i <= n; ++i) {
        ExactRational weight = seqs.z[i - k];
        if (k > 0) weight += seqs.a[i - k + 1] * static_cast<unsigned long>(k);
        acc += factorial(static_cast<long>(i)) * weight * l[n][i];
      }
      acc /= factorial(static_cast<long>(k));
      if (k > 0) acc += seqs.a[0] * l[n][k - 1];
      next[k] = acc;
    }
  }
  return l;
}

ExpRiordanArray make_triangle_B_general(int m, int r, std::size_t order) {
  if (m < 2) {
    throw UnsupportedError("type B Stirling array needs m >= 2 (got " +
                           std::to_string(m) + ")");
  }
  if (r < 0) throw DomainError("r must be nonnegative");
  // Special-cycle factor: sum_{t<m-1} z^t + sum_{t>=m-1} 2^{t+1} z^t.
  std::vector<ExactRational> c(order + 1, ExactRational(0));
  for (std::size_t t = 0; t <= order; ++t) {
    c[t] = t + 1 < static_cast<std::size_t>(m) ? ExactRational(1)
                                               : ExactRational(pow2(static_cast<long>(t) + 1));
  }
  const FormalPowerSeries special(std::move(c));
  // Cycles of order < m carry only the all-barred colouring.
  FormalPowerSeries f = fps::neg_log_one_minus(2, order);
  std::vector<ExactRational> short_cycles(order + 1, ExactRational(0));
  for (int k = 1; k <= m - 1 && static_cast<std::size_t>(k) <= order; ++k) {
    short_cycles[k] = make_rational(pow2(k) - 1, k);
  }
  f -= FormalPowerSeries(std::move(short_cycles));
  return ExpRiordanArray(series_pow(special, r), std::move(f));
}

ExpRiordanArray make_triangle_B(int m, int r, std::size_t order) {
  if (m != 2) return make_triangle_B_general(m, r, order);
  if (r < 0) throw DomainError("r must be nonnegative");
  const long one_plus[] = {1, 2};
  const long one_minus[] = {1, -2};
  const FormalPowerSeries ratio =
      FormalPowerSeries::polynomial(one_plus, order) *
      series_reciprocal(FormalPowerSeries::polynomial(one_minus, order));
  return ExpRiordanArray(series_pow(ratio, r),
                         fps::neg_log_one_minus(2, order) -
                             FormalPowerSeries::variable(order));
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::riordan: return "riordan";
    case Provenance::recurrence: return "recurrence";
    case Provenance::oracle: return "oracle";
    case Provenance::explicit_formula: return "explicit";
  }
  return "unknown";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "riordan") return Provenance::riordan;
  if (s == "recurrence") return Provenance::recurrence;
  if (s == "oracle") return Provenance::oracle;
  if (s == "explicit") return Provenance::explicit_formula;
  throw DomainError("unknown provenance '" + std::string(s) + "'");
}

ExactInt TriangleTable::at(std::size_t n, std::size_t k) const {
  if (n >= rows.size()) throw TruncationError("row beyond table size");
  if (k >= rows[n].size()) return 0;
  return rows[n][k];
}

TriangleTable materialize(const ExpRiordanArray& array, std::size_t rows) {
  if (rows > array.order() + 1) {
    throw TruncationError("table of " + std::to_string(rows) +
                          " rows needs array order >= " +
                          std::to_string(rows - 1));
  }
  TriangleTable table;
  table.provenance = Provenance::riordan;
  table.rows.resize(rows);
  // Column k uses g f^k, built incrementally.
  FormalPowerSeries column = array.g();
  for (std::size_t k = 0; k < rows; ++k) {
    const ExactInt k_fact = factorial(static_cast<long>(k));
    for (std::size_t n = k; n < rows; ++n) {
      const ExactRational v = column[n] * factorial(static_cast<long>(n)) / k_fact;
      table.rows[n].resize(n + 1);
      table.rows[n][k] = require_integral(
          v, "Riordan entry (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
    column = column * array.f();
  }
  return table;
}

}  // namespace typeb::riordan
