#include <doctest.h>

#include <algorithm>

#include "eulerian/verify.hpp"

using namespace eulerian;

namespace {

bool names(const VerifyReport& r, const std::string& identity) {
  const auto f = r.failed_identities();
  return std::find(f.begin(), f.end(), identity) != f.end();
}

}  // namespace

TEST_CASE("default battery passes") {
  const auto report = run_verify({}, recurrence_source());
  for (const auto& c : report.checks) {
    INFO(c.suite << ": " << c.identity << " " << c.case_label << " " << c.detail);
    CHECK(c.passed);
  }
  CHECK(report.all_passed());
  CHECK(report.failures() == 0);
  std::vector<std::string> suites;
  for (const auto& c : report.checks) {
    if (std::find(suites.begin(), suites.end(), c.suite) == suites.end()) suites.push_back(c.suite);
  }
  CHECK(suites == default_suites());
}

TEST_CASE("each default suite runs on its own") {
  for (const auto& s : default_suites()) {
    VerifyOptions opt;
    opt.suite = s;
    const auto report = run_verify(opt, recurrence_source());
    CHECK_FALSE(report.checks.empty());
    CHECK(report.all_passed());
    for (const auto& c : report.checks) CHECK(c.suite == s);
  }
}

TEST_CASE("a perturbed entry is caught and named") {
  const auto report = run_verify({}, corrupted_source(2, 3, 1));
  CHECK_FALSE(report.all_passed());
  CHECK(report.failures() > 0);
  CHECK(names(report, "recurrence = explicit composition sum"));
}

TEST_CASE("a perturbation outside the checked range changes nothing") {
  VerifyOptions opt;
  opt.m_max = 1;
  opt.n_max = 4;
  opt.suite = "core";
  CHECK(run_verify(opt, corrupted_source(2, 3, 1)).all_passed());
}

TEST_CASE("integral suite agrees only at second order") {
  VerifyOptions opt;
  opt.suite = "integral";
  const auto report = run_verify(opt, recurrence_source());
  REQUIRE(report.checks.size() == 5);
  for (const auto& c : report.checks) {
    const bool second_order = c.case_label.rfind("m=2 ", 0) == 0;
    INFO(c.case_label << " " << c.detail);
    CHECK(c.passed == second_order);
  }
}

TEST_CASE("suite names") {
  CHECK(is_known_suite("all"));
  CHECK(is_known_suite("integral"));
  CHECK_FALSE(is_known_suite("everything"));
  VerifyOptions opt;
  opt.suite = "everything";
  CHECK_THROWS_AS(run_verify(opt, recurrence_source()), std::invalid_argument);
}
