#include "walklab/harness.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "walklab/montecarlo.hpp"

namespace walklab {

std::string to_string(CheckStatus s) { return s == CheckStatus::proven ? "proven" : "conjectural"; }

std::string to_string(CostClass c) {
  switch (c) {
    case CostClass::fast: return "fast";
    case CostClass::medium: return "medium";
    case CostClass::slow: return "slow";
  }
  return "?";
}

bool glob_match(const std::string& pattern, const std::string& text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

std::vector<const CheckDefinition*> list_checks(const std::string& filter) {
  std::vector<const CheckDefinition*> out;
  for (const auto& d : registry())
    if (glob_match(filter, d.id)) out.push_back(&d);
  return out;
}

CheckResult run_check(const CheckDefinition& def, int digits, std::uint64_t seed) {
  CheckResult r;
  r.id = def.id;
  r.status = def.status;
  r.precision = digits;
  r.min_digits = def.min_digits(digits);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    CheckEnv env{make_context(digits), derive_seed(seed, def.id)};
    PrecisionScope scope(env.ctx);
    CheckOutcome o = def.run(env);
    r.lhs = std::move(o.lhs);
    r.rhs = std::move(o.rhs);
    r.digits_agreed = o.digits;
    r.pass = o.pass.value_or(true) && r.digits_agreed >= r.min_digits;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.pass = false;
  }
  r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_checks(const std::string& filter, int digits, std::uint64_t seed, int jobs) {
  if (jobs < 1) fail(Errc::invalid_argument, "run_checks: jobs must be positive");
  if (digits < PrecisionContext::kMinDigits) fail(Errc::invalid_argument, "run_checks: digits below minimum");
  const auto defs = list_checks(filter);
  std::vector<CheckResult> results(defs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < defs.size();) results[i] = run_check(*defs[i], digits, seed);
  };
  std::vector<std::thread> pool;
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), defs.size());
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

namespace {

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

// Failed checks carry their error message in the lhs slot.
std::string lhs_text(const CheckResult& c) { return c.error.empty() ? c.lhs : "error: " + c.error; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["precision"] = r.precision;
  j["seed"] = r.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = to_string(c.status);
    e["lhs"] = lhs_text(c);
    e["rhs"] = c.rhs;
    e["digits_agreed"] = c.digits_agreed;
    e["elapsed_s"] = seconds(c.elapsed_s);
    e["pass"] = c.pass;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "id,status,lhs,rhs,digits_agreed,elapsed_s,pass\n";
  for (const auto& c : r.checks)
    os << csv_field(c.id) << ',' << to_string(c.status) << ',' << csv_field(lhs_text(c)) << ',' << csv_field(c.rhs)
       << ',' << c.digits_agreed << ',' << seconds(c.elapsed_s) << ',' << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

void write_report(const Report& r, const std::string& path, const std::string& format) {
  std::string text;
  if (format == "json")
    text = report_json(r);
  else if (format == "csv")
    text = report_csv(r);
  else
    fail(Errc::invalid_argument, "unknown report format '" + format + "'");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) fail(Errc::io_error, "write to '" + path + "' failed");
}

Report parse_report_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Report r;
    r.precision = j.value("precision", 0);
    r.seed = j.value("seed", std::uint64_t{0});
    for (const auto& e : j.at("checks")) {
      CheckResult c;
      c.id = e.at("id").get<std::string>();
      c.status = e.at("status").get<std::string>() == "proven" ? CheckStatus::proven : CheckStatus::conjectural;
      c.lhs = e.at("lhs").get<std::string>();
      c.rhs = e.at("rhs").get<std::string>();
      c.digits_agreed = e.at("digits_agreed").get<int>();
      c.elapsed_s = std::stod(e.at("elapsed_s").get<std::string>());
      c.pass = e.at("pass").get<bool>();
      c.precision = r.precision;
      r.checks.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_argument, std::string("malformed report: ") + e.what());
  }
}

CheckOutcome compare(const Real& lhs, const Real& rhs, const PrecisionContext& ctx) {
  const int w = ctx.working_digits();
  return {lhs.to_string(w), rhs.to_string(w), digits_agreed(lhs, rhs, w), std::nullopt};
}

CheckOutcome compare_printed(const Real& value, const std::string& printed, const PrecisionContext& ctx) {
  int sig = 0;
  bool leading = true;
  for (char ch : printed) {
    if (ch < '0' || ch > '9') continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++sig;
  }
  return {value.to_string(ctx.working_digits()), printed, digits_agreed(value, Real(printed), sig), std::nullopt};
}

CheckOutcome worst(const std::vector<CheckOutcome>& parts) {
  if (parts.empty()) fail(Errc::invalid_argument, "worst: no parts");
  std::size_t k = 0;
  std::optional<bool> pass;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].digits < parts[k].digits) k = i;
    if (parts[i].pass) pass = pass.value_or(true) && *parts[i].pass;
  }
  CheckOutcome o = parts[k];
  o.pass = pass;
  return o;
}

}  // namespace walklab
