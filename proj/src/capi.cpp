#include "walklab.h"

#include <algorithm>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "walklab/exact_series.hpp"
#include "walklab/harness.hpp"
#include "walklab/lfunctions.hpp"
#include "walklab/modular.hpp"

struct walklab_check_list {
  std::vector<const walklab::CheckDefinition*> defs;
  std::vector<std::string> status, cost;
};

struct walklab_results {
  walklab::Report report;
  std::vector<std::string> status;
};

namespace {

thread_local std::string last_error;

template <typename F>
walklab_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return WALKLAB_OK;
  } catch (const walklab::Error& e) {
    last_error = e.what();
    return static_cast<walklab_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return WALKLAB_E_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) walklab::fail(walklab::Errc::invalid_argument, what);
}

std::ofstream open_out(const char* path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) walklab::fail(walklab::Errc::io_error, std::string("cannot open '") + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const char* path) {
  out.close();
  if (!out) walklab::fail(walklab::Errc::io_error, std::string("write to '") + path + "' failed");
}

}  // namespace

extern "C" {

const char* walklab_version(void) { return "0.1.0"; }

const char* walklab_last_error(void) { return last_error.c_str(); }

walklab_status walklab_list_checks(const char* filter, walklab_check_list** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    auto list = std::make_unique<walklab_check_list>();
    list->defs = walklab::list_checks(filter ? filter : "*");
    for (const auto* d : list->defs) {
      list->status.push_back(walklab::to_string(d->status));
      list->cost.push_back(walklab::to_string(d->cost));
    }
    *out = list.release();
  });
}

size_t walklab_check_list_size(const walklab_check_list* list) { return list ? list->defs.size() : 0; }

walklab_status walklab_check_list_get(const walklab_check_list* list, size_t index, walklab_check_info* out) {
  return guarded([&] {
    require(list && out, "null handle");
    require(index < list->defs.size(), "index out of range");
    const auto* d = list->defs[index];
    *out = {d->id.c_str(), d->description.c_str(), d->reference.c_str(), list->status[index].c_str(),
            list->cost[index].c_str()};
  });
}

void walklab_check_list_free(walklab_check_list* list) { delete list; }

walklab_status walklab_run_checks(const char* filter, int digits, uint64_t seed, int jobs, walklab_results** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    auto res = std::make_unique<walklab_results>();
    res->report.precision = digits;
    res->report.seed = seed;
    res->report.checks = walklab::run_checks(filter ? filter : "*", digits, seed, jobs);
    for (const auto& c : res->report.checks) res->status.push_back(walklab::to_string(c.status));
    *out = res.release();
  });
}

size_t walklab_results_size(const walklab_results* results) { return results ? results->report.checks.size() : 0; }

walklab_status walklab_results_get(const walklab_results* results, size_t index, walklab_check_result* out) {
  return guarded([&] {
    require(results && out, "null handle");
    require(index < results->report.checks.size(), "index out of range");
    const auto& c = results->report.checks[index];
    *out = {c.id.c_str(), results->status[index].c_str(), c.lhs.c_str(), c.rhs.c_str(), c.error.c_str(),
            c.digits_agreed, c.min_digits, c.elapsed_s, c.pass ? 1 : 0};
  });
}

int walklab_results_all_pass(const walklab_results* results) {
  if (!results) return 0;
  for (const auto& c : results->report.checks)
    if (!c.pass) return 0;
  return 1;
}

walklab_status walklab_results_write(const walklab_results* results, const char* path, const char* format) {
  return guarded([&] {
    require(results && path && format, "null argument");
    walklab::write_report(results->report, path, format);
  });
}

void walklab_results_free(walklab_results* results) { delete results; }

walklab_status walklab_export_coeffs(const char* form, size_t n_max, const char* path) {
  return guarded([&] {
    require(form && path, "null argument");
    require(n_max >= 1, "n_max must be at least 1");
    const std::string name(form);
    const auto names = walklab::cusp_form_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      const auto a = walklab::qexp(walklab::cusp_form(name), n_max);
      auto out = open_out(path);
      out << "n,a_n\n";
      for (size_t n = 1; n <= n_max; ++n) out << n << ',' << a[n] << '\n';
      finish(out, path);
      return;
    }
    const auto q = walklab::named_quotient(name);  // Errc::not_found for unknown names
    const auto c = q.coefficients(n_max + 1);
    auto out = open_out(path);
    out << "n,c_n\n";
    for (size_t n = 0; n <= n_max; ++n) out << n << ',' << c[n].get_str() << '\n';
    finish(out, path);
  });
}

walklab_status walklab_export_moments(const char* walk, unsigned n_max, const char* path) {
  return guarded([&] {
    require(walk && path, "null argument");
    const auto seq = walklab::moment_sequence(walklab::walk_from_string(walk), n_max);
    auto out = open_out(path);
    out << "n,value\n";
    for (unsigned n = 0; n <= n_max; ++n) out << n << ',' << seq.values[n].get_str() << '\n';
    finish(out, path);
  });
}

}  // extern "C"
