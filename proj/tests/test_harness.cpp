#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "walklab/error.hpp"
#include "walklab/harness.hpp"

using namespace walklab;

TEST_CASE("registry is sorted, unique and complete") {
  const auto& reg = registry();
  CHECK(reg.size() >= 30);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    ids.insert(reg[i].id);
    if (i > 0) CHECK(reg[i - 1].id < reg[i].id);
    CHECK(!reg[i].description.empty());
    CHECK(!reg[i].reference.empty());
    CHECK(reg[i].min_digits(30) >= 0);
    CHECK(static_cast<bool>(reg[i].run));
  }
  CHECK(ids.size() == reg.size());
  for (const auto& item : coverage_table())
    for (const auto& id : item.ids) CHECK_MESSAGE(ids.count(id) == 1, item.topic << ": " << id);
}

TEST_CASE("glob filtering") {
  CHECK(glob_match("thm1*", "thm1_numeric"));
  CHECK(!glob_match("thm1*", "w3_prime_closed"));
  CHECK(glob_match("bessel_w?_[1-3]", "bessel_w4_2"));
  CHECK(!glob_match("bessel_w?_[1-3]", "bessel_w4_5"));
  const auto thm1 = list_checks("thm1*");
  CHECK(thm1.size() >= 2);
  for (const auto* d : thm1) CHECK(d->id.rfind("thm1", 0) == 0);
  CHECK(list_checks("zzz*").empty());
  CHECK(run_checks("zzz*", 20, 1).empty());
}

TEST_CASE("running checks") {
  const auto r = run_checks("w4_prime_closed", 30, 1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].pass);
  CHECK(r[0].digits_agreed >= 22);
  CHECK(r[0].error.empty());

  const auto a = run_checks("bessel_w3_[12]", 20, 9, 1);
  const auto b = run_checks("bessel_w3_[12]", 20, 9, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].lhs == b[i].lhs);
    CHECK(a[i].digits_agreed == b[i].digits_agreed);
  }
  CHECK_THROWS_AS(run_checks("*", 20, 1, 0), Error);
  CHECK_THROWS_AS(run_checks("*", 5, 1, 1), Error);
}

TEST_CASE("a throwing check is recorded, not fatal") {
  CheckDefinition bad;
  bad.id = "synthetic_throw";
  bad.description = "throws";
  bad.reference = "none";
  bad.min_digits = [](int) { return 1; };
  bad.run = [](const CheckEnv&) -> CheckOutcome { fail(Errc::domain_error, "boom"); };
  const auto r = run_check(bad, 20, 1);
  CHECK(!r.pass);
  CHECK(r.error.find("boom") != std::string::npos);

  CheckDefinition veto = bad;
  veto.run = [](const CheckEnv&) { return CheckOutcome{"1", "1", 99, false}; };
  CHECK(!run_check(veto, 20, 1).pass);
}

TEST_CASE("outcome helpers") {
  const auto ctx = make_context(20);
  PrecisionScope s(ctx);
  CHECK(compare(Real(2), Real(2), ctx).digits == ctx.working_digits());
  CHECK(compare_printed(Real("0.48399797341"), "0.4839979734", ctx).digits == 10);
  CHECK(compare_printed(Real("0.4839"), "0.4839979734", ctx).digits < 6);
  const auto w = worst({{"a", "a", 12, std::nullopt}, {"b", "c", 3, true}, {"d", "d", 40, false}});
  CHECK(w.digits == 3);
  CHECK(w.pass == false);
}

TEST_CASE("report formats") {
  Report empty{30, 5, {}};
  const auto ej = parse_report_json(report_json(empty));
  CHECK(ej.precision == 30);
  CHECK(ej.seed == 5);
  CHECK(ej.checks.empty());

  Report r{20, 99, run_checks("w4_prime_closed", 20, 99)};
  CheckResult err;
  err.id = "x,y";
  err.error = "bad \"thing\"";
  r.checks.push_back(err);
  const auto back = parse_report_json(report_json(r));
  REQUIRE(back.checks.size() == 2);
  CHECK(back.checks[0].id == "w4_prime_closed");
  CHECK(back.checks[0].lhs == r.checks[0].lhs);
  CHECK(back.checks[0].digits_agreed == r.checks[0].digits_agreed);
  CHECK(back.checks[0].pass == r.checks[0].pass);
  CHECK(back.checks[1].lhs == "error: bad \"thing\"");
  CHECK(!back.checks[1].pass);

  const auto csv = report_csv(r);
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "id,status,lhs,rhs,digits_agreed,elapsed_s,pass");
  std::getline(in, row);
  CHECK(row.rfind("w4_prime_closed,proven,", 0) == 0);
  std::getline(in, row);
  CHECK(row.rfind("\"x,y\",proven,\"error: bad \"\"thing\"\"\"", 0) == 0);

  const std::string path = "walklab_test_report.json";
  write_report(r, path, "json");
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(parse_report_json(ss.str()).checks.size() == 2);
  std::remove(path.c_str());

  try {
    write_report(r, "/nonexistent_dir/x.json", "json");
    FAIL("expected io_error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io_error);
  }
  CHECK_THROWS_AS(write_report(r, path, "xml"), Error);
  CHECK_THROWS_AS(parse_report_json("{\"checks\": 3"), Error);
}
