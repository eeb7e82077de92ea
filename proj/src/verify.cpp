#include "typeb/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

#include "typeb/asymptotic.hpp"
#include "typeb/permcore.hpp"
#include "typeb/riordan.hpp"
#include "typeb/sequences.hpp"

namespace typeb::verify {

namespace {

using perm::Mode;

class Check {
 public:
  Check(std::string name, std::string left, std::string right) {
    result_.name = std::move(name);
    result_.left_source = std::move(left);
    result_.right_source = std::move(right);
  }

  template <class L, class R>
  void compare(const std::string& cell, const L& left, const R& right) {
    ++result_.cells;
    if (result_.failure || left == right) return;
    result_.failure = Failure{cell, text(left), text(right)};
  }

  void require(const std::string& cell, bool ok, const std::string& detail) {
    ++result_.cells;
    if (result_.failure || ok) return;
    result_.failure = Failure{cell, detail, "(expected to hold)"};
  }

  CheckResult take() { return std::move(result_); }

 private:
  static std::string text(const ExactInt& v) { return v.get_str(); }
  static std::string text(const ExactRational& v) { return v.get_str(); }
  static std::string text(const std::string& v) { return v; }
  static std::string text(const seq::Diagonals& d) {
    return d.first.get_str() + ", " + d.second.get_str();
  }
  static std::string text(const riordan::ExpRiordanArray& a) {
    std::string out = "g =";
    for (const auto& c : a.g().coefficients()) out += " " + c.get_str();
    out += "; f =";
    for (const auto& c : a.f().coefficients()) out += " " + c.get_str();
    return out;
  }

  CheckResult result_;
};

std::string cell(long n, long k, long r) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
         " r=" + std::to_string(r);
}

std::string cell(long n, long k, long r, long m) {
  return cell(n, k, r) + " m=" + std::to_string(m);
}

// Riordan arrays need order >= 1 even when only row 0 is compared.
std::size_t order_for(long n) { return static_cast<std::size_t>(std::max(n, 1L)); }

// Oracle checks stay inside the enumeration guard.
bool enumerable(long n, long r) { return n + r <= perm::enumeration_bound(); }

using Job = std::function<CheckResult()>;

void riordan_jobs(const Options& o, std::vector<Job>& jobs) {
  const long N = o.max_n, R = o.max_r;
  jobs.push_back([=] {
    Check c("stirling-b array vs recurrence", "riordan", "recurrence");
    for (long r = 0; r <= R; ++r) {
      const auto table = riordan::materialize(
          riordan::make_triangle_B(2, r, order_for(N)), N + 1);
      for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= n; ++k)
          c.compare(cell(n, k, r), table.at(n, k), seq::triangle_ge2_rec(n, k, r));
    }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("recurrence first form vs regrouped form", "recurrence",
            "recurrence (regrouped)");
    for (long r = 0; r <= R; ++r)
      for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= n; ++k)
          c.compare(cell(n, k, r), seq::triangle_ge2_rec(n, k, r),
                    seq::triangle_ge2_rec_regrouped(n, k, r));
    for (long n = 0; n <= N; ++n)
      for (long k = 0; k <= n; ++k)
        c.compare(cell(n, k, 0), seq::triangle_ge2_rec(n, k, 0),
                  seq::triangle_ge2_r0_rec(n, k));
    return c.take();
  });
  jobs.push_back([=] {
    Check c("column 0 closed form vs Lah sum", "explicit", "explicit (Lah)");
    for (long r = 0; r <= R; ++r)
      for (long n = 0; n <= N; ++n)
        c.compare(cell(n, 0, r), seq::triangle_ge2_column0(n, r),
                  seq::triangle_ge2_column0_lah(n, r));
    return c.take();
  });
  jobs.push_back([=] {
    Check c("production-matrix reconstruction", "riordan (rebuilt rows)",
            "riordan");
    for (long r = 0; r <= R; ++r) {
      const auto array = riordan::make_triangle_B(2, r, order_for(N + 1));
      const auto rows = riordan::reconstruct_rows(
          riordan::production_sequences(array), array.entry(0, 0), N + 1);
      for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= n; ++k)
          c.compare(cell(n, k, r), rows[n][k], array.entry(n, k));
    }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("d(r,n) four ways", "recurrence", "explicit / egf / riordan row sums");
    for (long r = 0; r <= R; ++r) {
      const auto egf = seq::d_egf(r, static_cast<std::size_t>(N));
      const std::size_t order = static_cast<std::size_t>(std::max(N, 1L));
      const auto sums = riordan::apply_fte(riordan::make_triangle_B(2, r, order),
                                           fps::exponential(1, order));
      for (long n = 0; n <= N; ++n) {
        const ExactInt d = seq::d_rec(r, n);
        const std::string at = "n=" + std::to_string(n) + " r=" + std::to_string(r);
        c.compare(at + " (explicit)", d, seq::d_explicit(r, n));
        c.compare(at + " (egf)", d, egf[n]);
        c.compare(at + " (row sum)", ExactRational(d), fps::egf_coeff(sums, n));
        ExactInt row = 0;
        for (long k = 0; k <= n; ++k) row += seq::triangle_ge2_rec(n, k, r);
        c.compare(at + " (triangle)", d, row);
      }
    }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("d polynomial in r", "polynomial", "recurrence");
    for (long n = 0; n <= N; ++n) {
      const auto poly = seq::d_poly(n);
      c.require("n=" + std::to_string(n) + " degree",
                poly.degree() == static_cast<std::size_t>(n),
                "degree " + std::to_string(poly.degree()));
      for (long r = 0; r <= std::max(R, n + 3); ++r)
        c.compare("n=" + std::to_string(n) + " r=" + std::to_string(r),
                  poly.evaluate(r), seq::d_rec(r, n));
    }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("column 0 vs lattice count", "recurrence", "2^n n! lattice_s");
    for (long r = 0; r <= R; ++r)
      for (long n = 0; n <= N; ++n)
        c.compare(cell(n, 0, r), seq::triangle_ge2_rec(n, 0, r),
                  ExactInt(pow2(n) * factorial(n) * seq::lattice_s(r, n)));
    return c.take();
  });
  jobs.push_back([=] {
    Check c("m = 2 diagonals", "explicit", "recurrence");
    for (long r = 0; r <= R; ++r)
      for (long n = 0; n + 2 <= std::max(N, 2L); ++n) {
        const auto d = seq::diagonals_ge2(n, r);
        c.compare(cell(n + 1, n, r), d.first, seq::triangle_ge2_rec(n + 1, n, r));
        c.compare(cell(n + 2, n, r), d.second, seq::triangle_ge2_rec(n + 2, n, r));
        c.compare(cell(n + 1, n, r, 2), d, seq::diagonals(n, r, 2));
      }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("group inverse vs inverse recurrence", "riordan", "recurrence");
    for (long r = 0; r <= R; ++r) {
      const auto array = riordan::make_triangle_B(2, r, order_for(N));
      const auto inv = riordan::invert(array);
      const auto product = riordan::multiply(array, inv);
      c.compare("r=" + std::to_string(r) + " product", product,
                riordan::ExpRiordanArray::identity(product.order()));
      const auto unsigned_inv =
          riordan::materialize(riordan::unsigned_conjugate(inv), N + 1);
      for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= n; ++k)
          c.compare(cell(n, k, r), unsigned_inv.at(n, k),
                    seq::inverse_triangle_rec(n, k, r));
    }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("m = 3, 4 array vs recurrence", "riordan", "recurrence");
    for (int m = 3; m <= 4; ++m)
      for (long r = 0; r <= R; ++r) {
        const auto table = riordan::materialize(
            riordan::make_triangle_B(m, r, order_for(N)), N + 1);
        for (long n = 0; n <= N; ++n)
          for (long k = 0; k <= n; ++k)
            c.compare(cell(n, k, r, m), table.at(n, k),
                      seq::triangle_gem_rec(n, k, r, m));
      }
    for (long r = 0; r <= R; ++r) {
      const auto table = riordan::materialize(
          riordan::make_triangle_B_general(2, r, order_for(N)), N + 1);
      for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= n; ++k)
          c.compare(cell(n, k, r, 2), table.at(n, k), seq::triangle_ge2_rec(n, k, r));
    }
    return c.take();
  });
}

void oracle_jobs(const Options& o, std::vector<Job>& jobs) {
  const long N = o.max_n, R = o.max_r;
  jobs.push_back([=] {
    Check c("oracle vs m = 2 recurrence", "oracle", "recurrence");
    for (long r = 0; r <= R; ++r)
      for (long n = 0; n <= N; ++n) {
        if (!enumerable(n, r)) continue;
        const auto row = perm::oracle_row(n, r, Mode::assoc, 2);
        for (long k = 0; k <= n; ++k)
          c.compare(cell(n, k, r), row[k], seq::triangle_ge2_rec(n, k, r));
      }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("oracle vs m = 3 recurrence", "oracle", "recurrence");
    for (long r = 0; r <= R; ++r)
      for (long n = 0; n <= N; ++n) {
        if (!enumerable(n, r)) continue;
        const auto row = perm::oracle_row(n, r, Mode::assoc, 3);
        for (long k = 0; k <= n; ++k)
          c.compare(cell(n, k, r, 3), row[k], seq::triangle_gem_rec(n, k, r, 3));
      }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("oracle vs m = 1 r-Stirling", "oracle", "2^{n+r} r-Stirling");
    for (long r = 0; r <= R; ++r)
      for (long n = 0; n <= N; ++n) {
        if (!enumerable(n, r)) continue;
        const auto row = perm::oracle_row(n, r, Mode::assoc, 1);
        c.compare(cell(n, 0, r, 1), row[0], seq::triangle_gem_column0(n, r, 1));
        for (long k = 0; k <= n; ++k)
          c.compare(cell(n, k, r, 1), row[k],
                    ExactInt(pow2(n + r) * seq::r_stirling1(n, k, r)));
      }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("oracle vs diagonal closed forms", "oracle", "explicit");
    for (long m = 1; m <= 3; ++m)
      for (long r = 0; r <= R; ++r)
        for (long n = 0; n + 1 <= N; ++n) {
          if (!enumerable(n + 1, r)) continue;
          const auto d = seq::diagonals(n, r, m);
          c.compare(cell(n + 1, n, r, m), perm::oracle_triangle(n + 1, r, n, Mode::assoc, m),
                    d.first);
          if (n + 2 <= N && enumerable(n + 2, r)) {
            c.compare(cell(n + 2, n, r, m),
                      perm::oracle_triangle(n + 2, r, n, Mode::assoc, m), d.second);
          }
        }
    return c.take();
  });
  jobs.push_back([=] {
    Check c("oracle totals vs type B factorial convolution", "oracle",
            "convolution");
    for (long m = 1; m <= 3; ++m)
      for (Mode mode : {Mode::assoc, Mode::restr})
        for (long n = 0; n <= N; ++n) {
          if (!enumerable(n, 0)) continue;
          c.compare("n=" + std::to_string(n) + " m=" + std::to_string(m) + " " +
                        perm::to_string(mode),
                    perm::oracle_total(n, 0, mode, m),
                    seq::typeB_factorial_conv(n, mode, m));
        }
    return c.take();
  });
}

void howard_jobs(const Options& o, std::vector<Job>& jobs) {
  const long N = o.max_n, R = o.max_r;
  using seq::HowardVariant;
  jobs.push_back([=] {
    Check c("type A identity", "lhs", "rhs");
    for (long n = 0; n <= N + 1; ++n)
      for (long k = 0; k <= n; ++k) {
        const auto s = seq::howard_check(n, k, 0, 0, HowardVariant::type_a);
        c.compare(cell(n, k, 0), s.lhs, s.rhs);
      }
    return c.take();
  });
  for (auto variant : {HowardVariant::general, HowardVariant::general_closed,
                       HowardVariant::r_zero}) {
    jobs.push_back([=] {
      Check c(seq::to_string(variant) + " identity", "lhs", "rhs");
      const long rmax = variant == HowardVariant::r_zero ? 0 : R;
      for (long m = 1; m <= 3; ++m)
        for (long r = 0; r <= rmax; ++r)
          for (long n = 0; n <= N; ++n)
            for (long k = 0; k <= n; ++k) {
              const auto s = seq::howard_check(n, k, r, m, variant);
              c.compare(cell(n, k, r, m), s.lhs, s.rhs);
            }
      return c.take();
    });
  }
  for (auto variant : {HowardVariant::m_one, HowardVariant::m_one_r_zero}) {
    jobs.push_back([=] {
      Check c(seq::to_string(variant) + " identity", "lhs", "rhs");
      const long rmax = variant == HowardVariant::m_one_r_zero ? 0 : R;
      for (long r = 0; r <= rmax; ++r)
        for (long n = 0; n <= N; ++n)
          for (long k = 0; k <= n; ++k) {
            const auto s = seq::howard_check(n, k, r, 1, variant);
            c.compare(cell(n, k, r), s.lhs, s.rhs);
          }
      return c.take();
    });
  }
}

void asymptotic_jobs(const Options& o, std::vector<Job>& jobs) {
  const long R = std::min(o.max_r, 2L);
  jobs.push_back([=] {
    Check c("asymptotic relative error", "d_rec / (n! d_asym e^{-1/2})", "1");
    for (long r = 0; r <= R; ++r) {
      double previous = 1e300;
      for (long n : {10L, 20L, 30L}) {
        const double err = seq::d_asym_relative_error(r, n);
        std::ostringstream detail;
        detail << "error " << err;
        const std::string at = "n=" + std::to_string(n) + " r=" + std::to_string(r);
        c.require(at + " decreasing", err < previous, detail.str());
        previous = err;
      }
      std::ostringstream detail;
      detail << "error " << previous;
      c.require("n=30 r=" + std::to_string(r) + " below 0.05", previous < 0.05,
                detail.str());
    }
    const double gap = seq::chow_limit_gap(25);
    std::ostringstream detail;
    detail << "gap " << gap;
    c.require("n=25 d(0,n)/(2^n n!) near 1/sqrt(e)", gap < 0.01, detail.str());
    return c.take();
  });
}

}  // namespace

std::string to_string(Scope s) {
  switch (s) {
    case Scope::all: return "all";
    case Scope::riordan: return "riordan";
    case Scope::oracle: return "oracle";
    case Scope::howard: return "howard";
    case Scope::asymptotic: return "asymptotic";
  }
  return "unknown";
}

Scope scope_from_string(const std::string& s) {
  for (auto scope : {Scope::all, Scope::riordan, Scope::oracle, Scope::howard,
                     Scope::asymptotic}) {
    if (to_string(scope) == s) return scope;
  }
  throw DomainError("unknown verification scope '" + s + "'");
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::string Report::to_text() const {
  std::ostringstream os;
  const CheckResult* first = nullptr;
  long cells = 0;
  for (const auto& c : checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cells
       << " cells)\n";
    cells += c.cells;
    if (!c.passed() && !first) first = &c;
  }
  if (first) {
    os << "first failure: " << first->name << " at " << first->failure->cell << '\n'
       << "  " << first->left_source << ": " << first->failure->left_value << '\n'
       << "  " << first->right_source << ": " << first->failure->right_value << '\n';
  }
  long failed = std::count_if(checks.begin(), checks.end(),
                              [](const CheckResult& c) { return !c.passed(); });
  os << (failed ? "FAILED" : "OK") << ": " << checks.size() - failed << '/'
     << checks.size() << " checks passed, " << cells << " cells compared\n";
  return os.str();
}

Report run(const Options& options) {
  if (options.max_n < 0 || options.max_r < 0) {
    throw DomainError("verification bounds must be nonnegative");
  }
  std::vector<Job> jobs;
  const Scope s = options.scope;
  if (s == Scope::all || s == Scope::riordan) riordan_jobs(options, jobs);
  if (s == Scope::all || s == Scope::oracle) oracle_jobs(options, jobs);
  if (s == Scope::all || s == Scope::howard) howard_jobs(options, jobs);
  if (s == Scope::all || s == Scope::asymptotic) asymptotic_jobs(options, jobs);

  std::vector<std::future<CheckResult>> pending;
  for (auto& job : jobs) pending.push_back(std::async(std::launch::async, job));
  Report report;
  for (auto& p : pending) report.checks.push_back(p.get());
  return report;
}

}  // namespace typeb::verify
