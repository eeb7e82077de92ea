#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "typeb/asymptotic.hpp"
#include "typeb/permcore.hpp"
#include "typeb/riordan.hpp"
#include "typeb/sequences.hpp"
#include "typeb/table_io.hpp"
#include "typeb/verify.hpp"

namespace typeb::cli {

namespace {

using perm::Mode;
using riordan::Provenance;
using riordan::TriangleTable;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string family;
  long m = 2;
  long r = 0;
  long rows = 7;
  long n = 0;
  long k = -1;
  std::string format = "pretty";
  std::string mode = "assoc";
  std::string method;
  std::string variant = "general";
  int precision = 30;
  long max_order = 64;
  int enum_bound = -1;
};

const std::vector<std::string> kTableFamilies = {
    "stirling-b", "d",          "inverse",   "lattice",        "tree",
    "stirling-a", "incomplete", "typeb-factorial"};

const std::vector<std::string> kSeqNames = {
    "d",        "lattice", "tree",      "incomplete", "typeb-factorial",
    "d-poly",   "d-asym",  "diagonals", "chow-limit", "howard"};

void check_rows(const Request& q) {
  if (q.rows < 0) throw UsageError("--rows must be nonnegative");
  if (q.rows > q.max_order + 1) {
    throw UsageError("--rows " + std::to_string(q.rows) +
                     " exceeds the truncation bound --max-order " +
                     std::to_string(q.max_order));
  }
  if (q.r < 0) throw UsageError("--r must be nonnegative");
}

std::string default_method(const std::string& family) {
  if (family == "stirling-b" || family == "inverse") return "riordan";
  if (family == "typeb-factorial") return "convolution";
  return "recurrence";
}

void require_method(const std::string& method,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (method == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("unsupported --method '" + method + "' (choose from " + list + ")");
}

TriangleTable single_row(std::vector<ExactInt> values, Provenance p) {
  TriangleTable t;
  t.rows.push_back(std::move(values));
  t.provenance = p;
  return t;
}

io::LabeledTable build(const Request& q) {
  check_rows(q);
  const std::string method = q.method.empty() ? default_method(q.family) : q.method;
  const long count = q.rows;
  const auto order = static_cast<std::size_t>(std::max(count - 1, 1L));
  const Mode mode = perm::mode_from_string(q.mode);
  io::LabeledTable out{q.family, q.m, q.r, {}};
  TriangleTable& t = out.table;

  if (q.family == "stirling-b") {
    require_method(method, {"riordan", "recurrence", "oracle"});
    if (method == "oracle") {
      for (long n = 0; n < count; ++n) {
        t.rows.push_back(perm::oracle_row(static_cast<int>(n), static_cast<int>(q.r),
                                          mode, static_cast<int>(q.m)));
      }
      t.provenance = Provenance::oracle;
    } else if (q.m < 2) {
      throw UsageError("stirling-b needs --m >= 2 (use --method oracle otherwise)");
    } else if (method == "riordan") {
      t = riordan::materialize(
          riordan::make_triangle_B(static_cast<int>(q.m), static_cast<int>(q.r), order),
          count);
    } else {
      for (long n = 0; n < count; ++n) {
        t.rows.emplace_back();
        for (long k = 0; k <= n; ++k)
          t.rows.back().push_back(seq::triangle_gem_rec(n, k, q.r, q.m));
      }
      t.provenance = Provenance::recurrence;
    }
  } else if (q.family == "inverse") {
    require_method(method, {"riordan", "recurrence"});
    if (method == "riordan") {
      t = riordan::materialize(
          riordan::unsigned_conjugate(
              riordan::invert(riordan::make_triangle_B(2, static_cast<int>(q.r), order))),
          count);
    } else {
      for (long n = 0; n < count; ++n) {
        t.rows.emplace_back();
        for (long k = 0; k <= n; ++k)
          t.rows.back().push_back(seq::inverse_triangle_rec(n, k, q.r));
      }
      t.provenance = Provenance::recurrence;
    }
  } else if (q.family == "stirling-a") {
    require_method(method, {"recurrence"});
    for (long n = 0; n < count; ++n) {
      t.rows.emplace_back();
      for (long k = 0; k <= n; ++k)
        t.rows.back().push_back(seq::stirling_a(n, k, mode, q.m));
    }
    t.provenance = Provenance::recurrence;
  } else if (q.family == "d") {
    require_method(method, {"recurrence", "explicit", "egf", "riordan"});
    std::vector<ExactInt> v;
    if (method == "egf") {
      if (count > 0) v = seq::d_egf(q.r, static_cast<std::size_t>(count - 1));
      t = single_row(std::move(v), Provenance::explicit_formula);
    } else if (method == "riordan") {
      const auto sums = riordan::apply_fte(
          riordan::make_triangle_B(2, static_cast<int>(q.r), order),
          fps::exponential(1, order));
      for (long n = 0; n < count; ++n)
        v.push_back(require_integral(fps::egf_coeff(sums, n), "row sums"));
      t = single_row(std::move(v), Provenance::riordan);
    } else {
      const bool rec = method == "recurrence";
      for (long n = 0; n < count; ++n)
        v.push_back(rec ? seq::d_rec(q.r, n) : seq::d_explicit(q.r, n));
      t = single_row(std::move(v),
                     rec ? Provenance::recurrence : Provenance::explicit_formula);
    }
  } else if (q.family == "lattice" || q.family == "tree" ||
             q.family == "incomplete") {
    require_method(method, {"recurrence"});
    std::vector<ExactInt> v;
    for (long n = 0; n < count; ++n) {
      if (q.family == "lattice") {
        v.push_back(seq::lattice_s(q.r, n));
      } else if (q.family == "tree") {
        v.push_back(seq::tree_count(n));
      } else {
        v.push_back(seq::incomplete_factorial(n, mode, q.m));
      }
    }
    t = single_row(std::move(v), q.family == "tree" ? Provenance::riordan
                                                     : Provenance::explicit_formula);
  } else if (q.family == "typeb-factorial") {
    require_method(method, {"convolution", "oracle"});
    std::vector<ExactInt> v;
    for (long n = 0; n < count; ++n) {
      v.push_back(method == "oracle"
                      ? perm::oracle_total(static_cast<int>(n), 0, mode,
                                           static_cast<int>(q.m))
                      : seq::typeB_factorial_conv(n, mode, q.m));
    }
    t = single_row(std::move(v),
                   method == "oracle" ? Provenance::oracle : Provenance::explicit_formula);
  } else {
    throw UsageError("unknown family '" + q.family + "'");
  }
  return out;
}

void emit(const io::LabeledTable& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << io::to_json(t);
  } else if (format == "csv") {
    out << io::to_csv(t.table);
  } else {
    out << io::to_pretty(t.table);
  }
}

int cmd_seq(const Request& q, std::ostream& out) {
  if (q.family == "d-poly") {
    if (q.n < 0) throw UsageError("--n must be nonnegative");
    out << seq::d_poly(q.n).to_string() << '\n';
  } else if (q.family == "d-asym") {
    if (q.n < 0 || q.r < 0) throw UsageError("--n and --r must be nonnegative");
    out << "exact       " << seq::d_rec(q.r, q.n).get_str() << '\n'
        << "asymptotic  " << seq::d_asym_decimal(q.r, q.n, q.precision) << '\n'
        << "rel. error  " << seq::d_asym_relative_error(q.r, q.n) << '\n';
  } else if (q.family == "diagonals") {
    if (q.n < 0 || q.r < 0) throw UsageError("--n and --r must be nonnegative");
    if (q.m < 1) throw UsageError("diagonals need --m >= 1");
    const auto d = seq::diagonals(q.n, q.r, q.m);
    out << d.first.get_str() << ' ' << d.second.get_str() << '\n';
  } else if (q.family == "chow-limit") {
    if (q.n < 0) throw UsageError("--n must be nonnegative");
    out << seq::chow_limit_gap(q.n) << '\n';
  } else if (q.family == "howard") {
    if (q.k < 0) throw UsageError("howard needs --k");
    const auto s = seq::howard_check(q.n, q.k, q.r, q.m,
                                     seq::howard_variant_from_string(q.variant));
    out << s.lhs.get_str() << ' ' << s.rhs.get_str() << '\n';
    return s.lhs == s.rhs ? 0 : 1;
  } else {
    emit(build(q), q.format, out);
  }
  return 0;
}

int cmd_oracle(const Request& q, std::ostream& out) {
  if (q.n < 0 || q.r < 0) throw UsageError("--n and --r must be nonnegative");
  const Mode mode = perm::mode_from_string(q.mode);
  const int n = static_cast<int>(q.n), r = static_cast<int>(q.r),
            m = static_cast<int>(q.m);
  if (q.k >= 0) {
    out << perm::oracle_triangle(n, r, static_cast<int>(q.k), mode, m).get_str() << '\n';
  } else {
    out << perm::oracle_total(n, r, mode, m).get_str() << '\n';
  }
  return 0;
}

void add_common(CLI::App* cmd, Request& q) {
  cmd->add_option("--m", q.m, "Cycle order bound m");
  cmd->add_option("--r", q.r, "Number of special elements r");
  cmd->add_option("--mode", q.mode, "Cycle window: assoc (>= m) or restr (<= m)")
      ->check(CLI::IsMember({"assoc", "restr"}));
  cmd->add_option("--enum-bound", q.enum_bound,
                  "Largest n+r the brute-force enumerator accepts")
      ->check(CLI::Range(0, 12));
}

void add_table_options(CLI::App* cmd, Request& q) {
  cmd->add_option("--rows,--terms", q.rows, "Number of rows or terms");
  cmd->add_option("--format", q.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));
  cmd->add_option("--method", q.method, "Computation route");
  cmd->add_option("--max-order", q.max_order, "Largest series truncation order")
      ->check(CLI::Range(0L, 4096L));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact type B r-Stirling numbers, r-derangements and identity checks",
               "typeb"};
  app.require_subcommand(1);
  Request q;
  verify::Options vopt;
  std::string scope = "all";

  auto* table = app.add_subcommand("table", "Emit a triangle or sequence");
  table->add_option("family", q.family, "Table family")
      ->required()
      ->check(CLI::IsMember(kTableFamilies));
  add_common(table, q);
  add_table_options(table, q);

  auto* sq = app.add_subcommand("seq", "Emit a sequence or a single derived value");
  sq->add_option("name", q.family, "Sequence name")
      ->required()
      ->check(CLI::IsMember(kSeqNames));
  add_common(sq, q);
  add_table_options(sq, q);
  sq->add_option("--n", q.n, "Index n");
  sq->add_option("--k", q.k, "Column k (howard)");
  sq->add_option("--variant", q.variant, "Identity variant (howard)");
  sq->add_option("--precision", q.precision, "Significant digits for d-asym")
      ->check(CLI::Range(1, 10000));

  auto* ver = app.add_subcommand("verify", "Run the identity verification suite");
  ver->add_option("scope", scope, "Check group")
      ->check(CLI::IsMember({"all", "riordan", "oracle", "howard", "asymptotic"}));
  ver->add_option("--max-n", vopt.max_n, "Largest n")->check(CLI::Range(0L, 40L));
  ver->add_option("--max-r", vopt.max_r, "Largest r")->check(CLI::Range(0L, 20L));
  ver->add_option("--enum-bound", q.enum_bound,
                  "Largest n+r the brute-force enumerator accepts")
      ->check(CLI::Range(0, 12));

  auto* ora = app.add_subcommand("oracle", "Brute-force count over signed permutations");
  add_common(ora, q);
  ora->add_option("--n", q.n, "Number of non-special elements")->required();
  ora->add_option("--k", q.k, "Column k (omit for the row total)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (q.enum_bound >= 0) perm::set_enumeration_bound(q.enum_bound);
    if (*table) {
      emit(build(q), q.format, out);
      return 0;
    }
    if (*sq) return cmd_seq(q, out);
    if (*ora) return cmd_oracle(q, out);
    vopt.scope = verify::scope_from_string(scope);
    const auto report = verify::run(vopt);
    out << report.to_text();
    return report.passed() ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const ResourceGuardError& e) {
    err << "resource guard: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace typeb::cli
