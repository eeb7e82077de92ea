#include "doctest.h"

#include <random>

#include "typeb/riordan.hpp"

using namespace typeb;
using namespace typeb::riordan;
using fps::FormalPowerSeries;

namespace {

// Reference r = 3 matrix. Six cells (row 4 col 1, row 5 cols 1-2,
// row 6 cols 1-3) disagree with the brute-force count; kStirlingB3Counted
// holds the enumerated values for those rows.
const std::vector<std::vector<long>> kStirlingB3Reference = {
    {1},
    {12, 1},
    {144, 28, 1},
    {1824, 592, 48, 1},
    {25344, 11232, 1552, 72, 1},
    {391680, 213888, 41824, 3280, 100, 1},
    {6727680, 4267008, 1061248, 119520, 6080, 132, 1},
};

const std::vector<std::vector<long>> kStirlingB3Counted = {
    {1},
    {12, 1},
    {144, 28, 1},
    {1824, 592, 48, 1},
    {25344, 11616, 1552, 72, 1},
    {391680, 229248, 43360, 3280, 100, 1},
    {6727680, 4724736, 1153408, 123360, 6080, 132, 1},
};

const std::vector<std::vector<long>> kUnsignedInverse3 = {
    {1},
    {12, 1},
    {192, 28, 1},
    {3936, 752, 48, 1},
    {99456, 22304, 1904, 72, 1},
    {3001344, 748672, 76320, 3920, 100, 1},
    {105544704, 28412416, 3265792, 203040, 7120, 132, 1},
};

ExpRiordanArray random_array(std::mt19937& rng, std::size_t order) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  std::vector<ExactRational> g(order + 1), f(order + 1);
  for (auto& x : g) x = make_rational(num(rng), den(rng));
  for (auto& x : f) x = make_rational(num(rng), den(rng));
  if (g[0] == 0) g[0] = 1;
  f[0] = 0;
  if (f[1] == 0) f[1] = -1;
  return ExpRiordanArray(FormalPowerSeries(g), FormalPowerSeries(f));
}

// n!/k! [z^n] g f^k by repeated naive Cauchy products, kept apart from the
// library's own entry extraction.
ExactRational naive_entry(const FormalPowerSeries& g, const FormalPowerSeries& f,
                          std::size_t n, std::size_t k) {
  std::vector<ExactRational> acc(g.coefficients().begin(), g.coefficients().end());
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<ExactRational> next(acc.size(), ExactRational(0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; i + j < acc.size(); ++j) next[i + j] += acc[i] * f[j];
    acc = std::move(next);
  }
  return acc[n] * factorial(static_cast<long>(n)) / factorial(static_cast<long>(k));
}

}  // namespace

TEST_CASE("identity array") {
  const auto id = ExpRiordanArray::identity(8);
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= 8; ++k) CHECK(id.entry(n, k) == (n == k ? 1 : 0));
  CHECK(invert(id) == id);
  CHECK(unsigned_conjugate(id) == id);
  const auto seqs = production_sequences(id);
  CHECK(seqs.a[0] == 1);
  for (std::size_t i = 1; i < seqs.a.size(); ++i) CHECK(seqs.a[i] == 0);
  for (const auto& z : seqs.z) CHECK(z == 0);
}

TEST_CASE("invalid arrays are rejected") {
  const auto z = FormalPowerSeries::variable(4);
  CHECK_THROWS_AS(ExpRiordanArray(FormalPowerSeries(4), z), DomainError);
  CHECK_THROWS_AS(ExpRiordanArray(FormalPowerSeries::constant(1, 4),
                                  FormalPowerSeries::constant(1, 4)),
                  DomainError);
  CHECK_THROWS_AS(make_triangle_B(1, 0, 6), UnsupportedError);
  CHECK_THROWS_AS(ExpRiordanArray::identity(4).entry(5, 0), TruncationError);
}

TEST_CASE("entries match a naive column construction") {
  std::mt19937 rng(3);
  const auto a = random_array(rng, 7);
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(a.entry(n, k) == naive_entry(a.g(), a.f(), n, k));
}

TEST_CASE("m = 2, r = 3 array against the reference matrix") {
  const auto table = materialize(make_triangle_B(2, 3, 6), 7);
  CHECK(table.provenance == Provenance::riordan);
  int agreeing = 0;
  for (std::size_t n = 0; n < 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(table.at(n, k) == kStirlingB3Counted[n][k]);
      agreeing += table.at(n, k) == kStirlingB3Reference[n][k];
    }
  CHECK(agreeing == 22);
  // The reference inverse table is consistent with the counted matrix and not
  // with the reference one.
  const auto inv = materialize(invert(make_triangle_B(2, 3, 6)), 7);
  for (std::size_t n = 0; n < 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      ExactInt counted = 0, reference = 0;
      for (std::size_t j = k; j <= n; ++j) {
        counted += kStirlingB3Counted[n][j] * inv.at(j, k);
        reference += kStirlingB3Reference[n][j] * inv.at(j, k);
      }
      CHECK(counted == (n == k ? 1 : 0));
      if (n == 4 && k == 1) CHECK(reference != 0);
    }
  CHECK(table.at(2, 5) == 0);
  const auto array = make_triangle_B(2, 3, 6);
  CHECK(array.entry(3, 1) == 592);
  CHECK(array.entry(6, 0) == 6727680);
}

TEST_CASE("r = 0 array satisfies the three-term recurrence") {
  const auto array = make_triangle_B(2, 0, 10);
  for (long n = 1; n < 10; ++n)
    for (long k = 1; k <= n + 1; ++k) {
      const ExactRational lower = n >= 1 && k >= 1 ? array.entry(n - 1, k - 1) : 0;
      CHECK(array.entry(n + 1, k) ==
            2 * n * array.entry(n, k) + 2 * n * lower + array.entry(n, k - 1));
    }
}

TEST_CASE("general-m construction reduces to the m = 2 array") {
  for (int r = 0; r <= 4; ++r)
    CHECK(materialize(make_triangle_B_general(2, r, 9), 10) ==
          materialize(make_triangle_B(2, r, 9), 10));
}

TEST_CASE("product and inverse") {
  const auto c = make_triangle_B(2, 3, 10);
  CHECK(multiply(c, invert(c)) == ExpRiordanArray::identity(10));
  CHECK(multiply(invert(c), c) == ExpRiordanArray::identity(10));
  const auto e = ExpRiordanArray(fps::exponential(1, 8), FormalPowerSeries::variable(8));
  const auto scale = ExpRiordanArray(FormalPowerSeries::constant(1, 8),
                                     FormalPowerSeries::variable(8) * ExactRational(2));
  const auto prod = multiply(e, scale);
  CHECK(prod.g() == fps::exponential(1, 8));
  CHECK(prod.f() == FormalPowerSeries::variable(8) * ExactRational(2));
  // Matrix product of the two triangles, entry by entry: C(n,k) 2^k.
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(prod.entry(n, k) == choose(n, k) * pow2(k));
}

TEST_CASE("unsigned inverse reproduces the reference table") {
  const auto inv = unsigned_conjugate(invert(make_triangle_B(2, 3, 6)));
  const auto table = materialize(inv, 7);
  for (std::size_t n = 0; n < 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) CHECK(table.at(n, k) == kUnsignedInverse3[n][k]);
  const auto signed_inv = invert(make_triangle_B(2, 3, 6));
  for (std::size_t n = 0; n < 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const long sign = (n + k) % 2 ? -1 : 1;
      CHECK(signed_inv.entry(n, k) == sign * kUnsignedInverse3[n][k]);
    }
}

TEST_CASE("column 0 of the unsigned inverse at r = 1 counts trees") {
  const auto inv = unsigned_conjugate(invert(make_triangle_B(2, 1, 6)));
  const long trees[] = {1, 4, 32, 416, 7552, 176128};
  for (std::size_t n = 0; n < 6; ++n) CHECK(inv.entry(n, 0) == trees[n]);
}

TEST_CASE("apply_fte") {
  const auto c = make_triangle_B(2, 2, 8);
  CHECK(apply_fte(c, FormalPowerSeries::constant(1, 8)) == c.g());
  const auto h = fps::exponential(3, 8);
  CHECK(apply_fte(ExpRiordanArray::identity(8), h) == h);
  const long one_plus[] = {1, 2};
  const auto ratio = FormalPowerSeries::polynomial(one_plus, 8) * fps::geometric(2, 8);
  CHECK(apply_fte(c, fps::exponential(1, 8)) ==
        fps::series_pow(ratio, 2) * fps::exponential(-1, 8) * fps::geometric(2, 8));
}

TEST_CASE("production sequences rebuild the rows") {
  const auto c = make_triangle_B(2, 3, 11);
  const auto seqs = production_sequences(c);
  CHECK(seqs.a[0] == c.f()[1]);
  const auto rows = reconstruct_rows(seqs, c.entry(0, 0), 11);
  for (std::size_t n = 0; n < 11; ++n)
    for (std::size_t k = 0; k <= n; ++k) CHECK(rows[n][k] == c.entry(n, k));
}

TEST_CASE("group laws and reconstruction on random arrays") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_array(rng, 8), b = random_array(rng, 8), c = random_array(rng, 8);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, ExpRiordanArray::identity(8)) == a);
    CHECK(multiply(ExpRiordanArray::identity(8), a) == a);
    CHECK(multiply(a, invert(a)) == ExpRiordanArray::identity(8));
    CHECK(invert(invert(a)) == a);
    const auto rows = reconstruct_rows(production_sequences(a), a.entry(0, 0), 8);
    for (std::size_t n = 0; n < 8; ++n)
      for (std::size_t k = 0; k <= n; ++k) CHECK(rows[n][k] == a.entry(n, k));
  }
}

TEST_CASE("materialize refuses non-integer arrays") {
  const auto half = ExpRiordanArray(fps::geometric(make_rational(1, 2), 4),
                                    FormalPowerSeries::variable(4));
  CHECK_THROWS_AS(materialize(half, 3), ConsistencyError);
  CHECK(provenance_from_string("explicit") == Provenance::explicit_formula);
  CHECK(to_string(Provenance::oracle) == "oracle");
}
