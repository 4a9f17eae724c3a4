// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "walklab.h"

namespace {

std::string slurp(const char* path) {
  std::ifstream f(path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("listing") {
  walklab_check_list* list = nullptr;
  REQUIRE(walklab_list_checks("*", &list) == WALKLAB_OK);
  const size_t n = walklab_check_list_size(list);
  CHECK(n >= 30);
  walklab_check_info info;
  REQUIRE(walklab_check_list_get(list, 0, &info) == WALKLAB_OK);
  CHECK(std::string(info.status).size() > 0);
  CHECK(walklab_check_list_get(list, n, &info) == WALKLAB_E_INVALID_ARGUMENT);
  CHECK(std::string(walklab_last_error()).size() > 0);
  walklab_check_list_free(list);

  REQUIRE(walklab_list_checks("zzz*", &list) == WALKLAB_OK);
  CHECK(walklab_check_list_size(list) == 0);
  walklab_check_list_free(list);

  CHECK(walklab_list_checks("*", nullptr) == WALKLAB_E_INVALID_ARGUMENT);
  CHECK(walklab_check_list_size(nullptr) == 0);
  CHECK(std::string(walklab_version()).size() > 0);
}

TEST_CASE("running and writing") {
  walklab_results* res = nullptr;
  REQUIRE(walklab_run_checks("w[34]_prime_closed", 20, 1, 2, &res) == WALKLAB_OK);
  REQUIRE(walklab_results_size(res) == 2);
  walklab_check_result r;
  REQUIRE(walklab_results_get(res, 0, &r) == WALKLAB_OK);
  CHECK(std::string(r.id) == "w3_prime_closed");
  CHECK(r.pass == 1);
  CHECK(r.digits_agreed >= r.min_digits);
  CHECK(std::string(r.error).empty());
  CHECK(walklab_results_all_pass(res) == 1);

  const char* jpath = "capi_report.json";
  const char* cpath = "capi_report.csv";
  CHECK(walklab_results_write(res, jpath, "json") == WALKLAB_OK);
  CHECK(slurp(jpath).find("\"digits_agreed\"") != std::string::npos);
  CHECK(walklab_results_write(res, cpath, "csv") == WALKLAB_OK);
  CHECK(slurp(cpath).rfind("id,status,lhs,rhs,digits_agreed,elapsed_s,pass\n", 0) == 0);
  CHECK(walklab_results_write(res, "/nonexistent_dir/r.json", "json") == WALKLAB_E_IO);
  CHECK(walklab_results_write(res, jpath, "yaml") == WALKLAB_E_INVALID_ARGUMENT);
  std::remove(jpath);
  std::remove(cpath);
  walklab_results_free(res);

  CHECK(walklab_run_checks("*", 3, 1, 1, &res) == WALKLAB_E_INVALID_ARGUMENT);
  CHECK(walklab_results_all_pass(nullptr) == 0);
}

TEST_CASE("exports") {
  const char* path = "capi_export.csv";
  REQUIRE(walklab_export_coeffs("f2", 5, path) == WALKLAB_OK);
  CHECK(slurp(path) == "n,a_n\n1,1\n2,-1\n3,-1\n4,-1\n5,1\n");
  REQUIRE(walklab_export_moments("w3", 3, path) == WALKLAB_OK);
  CHECK(slurp(path) == "n,value\n0,1\n1,3\n2,15\n3,93\n");
  REQUIRE(walklab_export_moments("w4", 2, path) == WALKLAB_OK);
  CHECK(slurp(path) == "n,value\n0,1\n1,4\n2,28\n");
  std::remove(path);

  CHECK(walklab_export_coeffs("no_such_form", 5, path) == WALKLAB_E_NOT_FOUND);
  CHECK(walklab_export_coeffs("f2", 0, path) == WALKLAB_E_INVALID_ARGUMENT);
  CHECK(walklab_export_moments("w9", 3, path) != WALKLAB_OK);
  CHECK(walklab_export_coeffs("f2", 5, "/nonexistent_dir/c.csv") == WALKLAB_E_IO);
}
