#include <catch_amalgamated.hpp>

#include "qdent/errors.hpp"
#include "qdent/verify.hpp"

using namespace qdent;

TEST_CASE("verify passes on small systems") {
  VerifyOptions o;
  o.max_dots = 2;
  o.samples_per_period = 3;
  const auto report = verify_against_oracle(o);
  CHECK(report.passed());
  CHECK(report.checked == 9);
}

TEST_CASE("verify passes up to N=10 with 25 samples") {
  VerifyOptions o;
  o.max_dots = 10;
  o.samples_per_period = 25;
  o.tolerance = 1e-9;
  const auto report = verify_against_oracle(o);
  CHECK(report.passed());
  CHECK(report.checked == 25 * (3 + 4 + 5 + 6 + 7 + 8 + 9 + 10 + 11));
  CHECK(report.max_abs_diff < 1e-9);
}

TEST_CASE("verify detects a corrupted amplitude table") {
  VerifyOptions o;
  o.max_dots = 4;
  o.samples_per_period = 5;
  o.corrupt_table = true;
  const auto report = verify_against_oracle(o);
  CHECK_FALSE(report.passed());
  for (std::size_t i = 1; i < report.mismatches.size(); ++i) {
    const auto& a = report.mismatches[i - 1];
    const auto& b = report.mismatches[i];
    CHECK(std::tie(a.dots, a.excitations, a.kt) < std::tie(b.dots, b.excitations, b.kt));
  }
}

TEST_CASE("verify rejects bad options") {
  VerifyOptions o;
  o.max_dots = 1;
  CHECK_THROWS_AS(verify_against_oracle(o), DomainError);
  o.max_dots = 4;
  o.samples_per_period = 0;
  CHECK_THROWS_AS(verify_against_oracle(o), DomainError);
  o.samples_per_period = 3;
  o.max_dimension = 2;
  CHECK_THROWS_AS(verify_against_oracle(o), BudgetError);
}
