#include "doctest.h"

#include "typeb/sequences.hpp"
#include "typeb/table_io.hpp"

using namespace typeb;
using namespace typeb::io;

namespace {

LabeledTable stirling_b3() {
  return {"stirling-b", 2, 3, riordan::materialize(riordan::make_triangle_B(2, 3, 6), 7)};
}

}  // namespace

TEST_CASE("json layout") {
  LabeledTable t{"d", 2, 0, {{{1, 1, 5}}, riordan::Provenance::recurrence}};
  CHECK(to_json(t) ==
        "{\"family\":\"d\",\"m\":2,\"r\":0,\"rows\":[[1,1,5]],\"provenance\":\"recurrence\"}\n");
}

TEST_CASE("json round-trips, including values beyond 64 bits") {
  const auto t = stirling_b3();
  CHECK(from_json(to_json(t)) == t);
  LabeledTable big{"d", 2, 5, {}};
  big.table.provenance = riordan::Provenance::explicit_formula;
  big.table.rows.push_back({});
  for (long n = 0; n <= 30; ++n) big.table.rows[0].push_back(seq::d_rec(5, n));
  CHECK(big.table.rows[0].back() > ExactInt("18446744073709551616"));
  CHECK(from_json(to_json(big)) == big);
  LabeledTable negative{"x", -1, 0, {{{-5, ExactInt("-123456789012345678901234567890")}},
                                     riordan::Provenance::oracle}};
  CHECK(from_json(to_json(negative)) == negative);
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(from_json("{"), DomainError);
  CHECK_THROWS_AS(from_json("{\"family\":\"d\"}"), DomainError);
  CHECK_THROWS_AS(from_json("{\"family\":\"d\",\"m\":2,\"r\":0,\"rows\":[[1.5]],"
                            "\"provenance\":\"oracle\"}"),
                  DomainError);
  CHECK_THROWS_AS(from_json("{\"family\":\"d\",\"m\":2,\"r\":0,\"rows\":[[1]],"
                            "\"provenance\":\"guess\"}"),
                  DomainError);
  CHECK_THROWS_AS(from_json("[1,2]"), DomainError);
}

TEST_CASE("csv and pretty output") {
  const auto t = stirling_b3();
  const std::string csv = to_csv(t.table);
  CHECK(csv.substr(0, 13) == "1\n12,1\n144,28");
  CHECK(csv.find("\n1824,592,48,1\n") != std::string::npos);
  riordan::TriangleTable seq_row{{{1, 1, 5, 29, 233, 2329}}, riordan::Provenance::recurrence};
  CHECK(to_pretty(seq_row) == "1 1 5 29 233 2329\n");
  riordan::TriangleTable small{{{1}, {12, 1}, {144, 28, 1}}, riordan::Provenance::riordan};
  CHECK(to_pretty(small) == "  1\n 12  1\n144 28 1\n");
}
