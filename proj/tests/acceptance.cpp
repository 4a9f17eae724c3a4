// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Each criterion names the registry checks it relies on, the working
// precision, the agreement it demands and a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "walklab/harness.hpp"
#include "walklab/lfunctions.hpp"
#include "walklab/walks.hpp"

using namespace walklab;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Need {
  std::string id;
  int digits;      // working precision
  int min_agree;   // 0: rely on the check's own verdict only
};

struct Verdict {
  bool ok = true;
  std::string note;
};

const CheckDefinition& find(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return d;
  fail(Errc::not_found, "no check '" + id + "'");
}

void run_needs(const std::vector<Need>& needs, Verdict& v, double per_check_budget = 0) {
  for (const auto& n : needs) {
    const auto r = run_check(find(n.id), n.digits, kSeed);
    const bool ok = r.pass && r.digits_agreed >= n.min_agree &&
                    (per_check_budget <= 0 || r.elapsed_s < per_check_budget);
    if (!ok) {
      v.ok = false;
      v.note += " " + n.id + "(" + std::to_string(r.digits_agreed) + (r.error.empty() ? "" : ", " + r.error) + ")";
    }
  }
}

struct Criterion {
  int number;
  std::string title;
  double budget_s;
  std::function<Verdict()> body;
};

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;
  c.push_back({1, "exact factorisation through t^30", 30, [] {
                 Verdict v;
                 run_needs({{"thm1_formal_b4", 30, 0}, {"thm1_formal_b_rationals", 30, 0}}, v);
                 return v;
               }});
  c.push_back({2, "W3'(0), W4'(0) closed forms", 120, [] {
                 Verdict v;
                 run_needs({{"w3_prime_closed", 30, 20}, {"w4_prime_closed", 30, 20}}, v, 60);
                 return v;
               }});
  c.push_back({3, "variant measure: printed value and L(f2; 3)", 120, [] {
                 Verdict v;
                 run_needs({{"thm2_boyd", 20, 10}}, v);
                 const auto ctx = make_context(20);
                 PrecisionScope s(ctx);
                 const Real m = mahler_variant(Real(1), VariantMethod::theorem2, ctx);
                 const int d = digits_agreed(m, -2 * lprime_conversion("f2", 1, ctx), ctx.working_digits());
                 if (d < 12) {
                   v.ok = false;
                   v.note += " L-value(" + std::to_string(d) + ")";
                 }
                 return v;
               }});
  c.push_back({4, "squared polynomial: two routes and printed value", 120, [] {
                 Verdict v;
                 run_needs({{"thm3_routes", 30, 15}, {"thm3_printed", 30, 10}}, v);
                 return v;
               }});
  c.push_back({5, "W5'(0), W6'(0) against cusp L-values", 3600, [] {
                 Verdict v;
                 run_needs({{"w5_conjecture", 20, 8}, {"w6_conjecture_modular", 20, 8}, {"w6_via_p3", 20, 8},
                            {"w6_cross_route", 20, 10}},
                           v, 1800);
                 return v;
               }});
  c.push_back({6, "Bessel integrals for W3(2n), W4(2n), n = 1..5", 60, [] {
                 Verdict v;
                 std::vector<Need> needs;
                 for (int n = 1; n <= 5; ++n) {
                   needs.push_back({"bessel_w3_" + std::to_string(n), 30, 15});
                   needs.push_back({"bessel_w4_" + std::to_string(n), 30, 15});
                 }
                 run_needs(needs, v);
                 return v;
               }});
  c.push_back({7, "ladder integrals", 900, [] {
                 Verdict v;
                 run_needs({{"L15_0", 30, 15}, {"L15_1", 30, 8}, {"L15_2", 30, 8}, {"L15_2_printed", 30, 10}}, v,
                           300);
                 return v;
               }});
  c.push_back({8, "modular identity suite", 300, [] {
                 Verdict v;
                 std::vector<Need> needs;
                 for (const char* id : {"p3_modular_consistency", "P3_eisenstein", "p3_dx_identity",
                                        "p3_product_formula", "p4_modular_consistency", "atkin_lehner",
                                        "reflection_integral", "level8_identities", "eisenstein_eta_identities",
                                        "eisenstein_transform", "logderiv_E1"})
                   needs.push_back({id, 30, 22});
                 needs.push_back({"p4_fixed_point", 30, 22});
                 needs.push_back({"tau0_locate", 30, 13});
                 run_needs(needs, v);
                 return v;
               }});
  c.push_back({9, "4F3 combination against L(f2_hat; 3)", 120, [] {
                 Verdict v;
                 run_needs({{"zu13_4f3", 30, 12}}, v);
                 return v;
               }});
  c.push_back({10, "eta integral against L'(chi_-3; -1)", 120, [] {
                 Verdict v;
                 run_needs({{"bz02_eta_integral", 30, 12}}, v);
                 return v;
               }});
  c.push_back({11, "density property suite", 600, [] {
                 Verdict v;
                 run_needs({{"density_normalization", 30, 20}, {"mellin_moments", 30, 20}, {"phat_gamma", 30, 0},
                            {"gs_logmax", 30, 20}, {"p4_branch_continuity", 30, 18}},
                           v);
                 return v;
               }});
  c.push_back({12, "Monte Carlo moments and histograms", 120, [] {
                 Verdict v;
                 run_needs({{"mc_variant_moments", 20, 0}, {"mc_density_p3", 20, 0}, {"mc_density_p4", 20, 0},
                            {"mc_density_phat", 20, 0}},
                           v);
                 const auto a = run_check(find("mc_variant_moments"), 20, kSeed);
                 const auto b = run_check(find("mc_variant_moments"), 20, kSeed);
                 if (a.lhs != b.lhs) {
                   v.ok = false;
                   v.note += " rerun differs";
                 }
                 return v;
               }});
  return c;
}

}  // namespace

int main() {
  bool all = true;
  for (const auto& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string(" error: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt >= c.budget_s) {
      v.ok = false;
      v.note += " over budget";
    }
    all = all && v.ok;
    std::printf("%s criterion %2d  %-50s %8.2fs%s\n", v.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), dt,
                v.note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
