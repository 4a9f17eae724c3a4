// walklab command line: list and run checks, export q-expansions and moments.
// Talks to the library only through the C interface.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "walklab.h"

namespace {

int default_digits() {
  if (const char* env = std::getenv("WALKLAB_DIGITS")) {
    char* end = nullptr;
    const long d = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && d > 0 && d < 100000) return static_cast<int>(d);
    std::fprintf(stderr, "walklab: ignoring malformed WALKLAB_DIGITS='%s'\n", env);
  }
  return 30;
}

int report_error(walklab_status s) {
  std::fprintf(stderr, "walklab: %s (code %d)\n", walklab_last_error(), static_cast<int>(s));
  return 2;
}

int cmd_list(const std::string& filter) {
  walklab_check_list* list = nullptr;
  if (auto s = walklab_list_checks(filter.c_str(), &list)) return report_error(s);
  const size_t n = walklab_check_list_size(list);
  for (size_t i = 0; i < n; ++i) {
    walklab_check_info info;
    walklab_check_list_get(list, i, &info);
    std::printf("%-26s %-11s %-6s %s\n", info.id, info.status, info.cost, info.description);
  }
  walklab_check_list_free(list);
  return 0;
}

int cmd_run(const std::string& filter, int digits, std::uint64_t seed, int jobs, const std::string& json,
            const std::string& csv) {
  walklab_results* res = nullptr;
  if (auto s = walklab_run_checks(filter.c_str(), digits, seed, jobs, &res)) return report_error(s);
  const size_t n = walklab_results_size(res);
  std::printf("precision %d digits, seed %llu\n", digits, static_cast<unsigned long long>(seed));
  for (size_t i = 0; i < n; ++i) {
    walklab_check_result r;
    walklab_results_get(res, i, &r);
    std::printf("%s %-26s digits %3d (need %3d) %8.2fs", r.pass ? "PASS" : "FAIL", r.id, r.digits_agreed,
                r.min_digits, r.elapsed_s);
    if (r.error[0]) std::printf("  error: %s", r.error);
    std::printf("\n");
  }
  int rc = walklab_results_all_pass(res) ? 0 : 1;
  std::printf("%zu checks, %s\n", n, rc == 0 ? "all passed" : "some failed");
  for (const auto& [path, fmt] : {std::pair{json, "json"}, std::pair{csv, "csv"}}) {
    if (path.empty()) continue;
    if (auto s = walklab_results_write(res, path.c_str(), fmt)) rc = report_error(s);
  }
  walklab_results_free(res);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walklab: numerical checks for short random walks, Mahler measures and L-values"};
  app.require_subcommand(1);

  std::string filter = "*";
  auto* list = app.add_subcommand("list", "list registered checks");
  list->add_option("--filter", filter, "glob on check ids");

  int digits = default_digits();
  std::uint64_t seed = 20240601;
  int jobs = 1;
  std::string json, csv;
  auto* run = app.add_subcommand("run", "run checks and report digit agreement");
  run->add_option("--filter", filter, "glob on check ids");
  run->add_option("--digits", digits, "decimal digits (default 30 or WALKLAB_DIGITS)")->check(CLI::Range(10, 10000));
  run->add_option("--seed", seed, "seed for the Monte Carlo checks");
  run->add_option("--jobs", jobs, "checks run concurrently")->check(CLI::Range(1, 1024));
  auto* json_opt = run->add_option("--json", json, "write a JSON report");
  auto* csv_opt = run->add_option("--csv", csv, "write a CSV report");
  json_opt->excludes(csv_opt);

  std::string form, out, walk;
  std::size_t n_max = 0;
  auto* coeffs = app.add_subcommand("export-coeffs", "write q-expansion coefficients as CSV");
  coeffs->add_option("--form", form, "cusp form or eta quotient name")->required();
  coeffs->add_option("--n-max", n_max, "last index")->required()->check(CLI::PositiveNumber);
  coeffs->add_option("--out", out, "output path")->required();

  unsigned moments_n = 0;
  auto* moments = app.add_subcommand("export-moments", "write even moments as CSV");
  moments->add_option("--walk", walk, "walk")->required()->check(CLI::IsMember({"w2", "w3", "w4", "wtilde", "what"}));
  moments->add_option("--n-max", moments_n, "last n (moment of order 2n)")->required();
  moments->add_option("--out", out, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  if (*list) return cmd_list(filter);
  if (*run) return cmd_run(filter, digits, seed, jobs, json, csv);
  if (*coeffs) {
    if (auto s = walklab_export_coeffs(form.c_str(), n_max, out.c_str())) return report_error(s);
    return 0;
  }
  if (*moments) {
    if (auto s = walklab_export_moments(walk.c_str(), moments_n, out.c_str())) return report_error(s);
    return 0;
  }
  return 2;
}
