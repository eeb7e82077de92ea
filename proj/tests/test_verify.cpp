#include "doctest.h"

#include "typeb/errors.hpp"
#include "typeb/verify.hpp"

using namespace typeb;
using namespace typeb::verify;

TEST_CASE("every scope passes on its default grid") {
  for (Scope s : {Scope::riordan, Scope::howard, Scope::asymptotic}) {
    const auto report = run({s, 6, 3});
    INFO(report.to_text());
    CHECK(report.passed());
    CHECK_FALSE(report.checks.empty());
  }
  const auto oracle = run({Scope::oracle, 5, 3});
  INFO(oracle.to_text());
  CHECK(oracle.passed());
}

TEST_CASE("report text is deterministic") {
  const auto a = run({Scope::all, 3, 2}).to_text();
  const auto b = run({Scope::all, 3, 2}).to_text();
  CHECK(a == b);
  CHECK(a.find("PASS oracle vs m = 2 recurrence") != std::string::npos);
  CHECK(a.rfind("OK: ", 0) == std::string::npos);
  CHECK(a.find("\nOK: ") != std::string::npos);
}

TEST_CASE("a failing check reports its first cell with both sides") {
  Report report;
  CheckResult ok{"fine", "a", "b", 3, std::nullopt};
  CheckResult bad{"broken", "recurrence", "oracle", 5, Failure{"n=2 k=1 r=0", "7", "8"}};
  report.checks = {ok, bad};
  CHECK_FALSE(report.passed());
  const std::string text = report.to_text();
  CHECK(text.find("FAIL broken") != std::string::npos);
  CHECK(text.find("first failure: broken at n=2 k=1 r=0") != std::string::npos);
  CHECK(text.find("recurrence: 7") != std::string::npos);
  CHECK(text.find("oracle: 8") != std::string::npos);
  CHECK(text.find("FAILED: 1/2") != std::string::npos);
}

TEST_CASE("scope names and bounds") {
  CHECK(scope_from_string("howard") == Scope::howard);
  CHECK(to_string(Scope::asymptotic) == "asymptotic");
  CHECK_THROWS_AS(scope_from_string("x"), DomainError);
  CHECK_THROWS_AS(run({Scope::all, -1, 0}), DomainError);
}
