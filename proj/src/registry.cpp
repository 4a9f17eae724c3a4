// The check registry. Every entry compares two routes to the same number;
// thresholds: proven identities need digits - 10 (modular identities
// digits - 8), conjectural ones 8, printed constants all printed digits.

#include <algorithm>
#include <cstdio>

#include "walklab/exact_series.hpp"
#include "walklab/harness.hpp"
#include "walklab/lfunctions.hpp"
#include "walklab/modular.hpp"
#include "walklab/montecarlo.hpp"
#include "walklab/quadrature.hpp"
#include "walklab/special.hpp"
#include "walklab/walks.hpp"

namespace walklab {

namespace {

std::function<int(int)> rel(int k) {
  return [k](int d) { return d - k; };
}
std::function<int(int)> fixed(int n) {
  return [n](int) { return n; };
}

Complex itau(const Real& y) { return Complex(Real(0), y); }

Real zeta3_term(const PrecisionContext& ctx) { return 7 * ctx.zeta3() / (2 * ctx.pi() * ctx.pi()); }

// Real and imaginary parts compared separately.
CheckOutcome compare_complex(const Complex& a, const Complex& b, const PrecisionContext& ctx) {
  const int w = ctx.working_digits();
  auto str = [w](const Complex& z) { return z.real().to_string(w) + (z.imag().sign() < 0 ? " - " : " + ") +
                                            abs(z.imag()).to_string(w) + "i"; };
  return {str(a), str(b), digits_agreed(a, b, w), std::nullopt};
}

CheckOutcome exact_outcome(bool ok, const std::string& lhs, const std::string& rhs, const PrecisionContext& ctx) {
  return {lhs, rhs, ok ? ctx.working_digits() : 0, ok};
}

CheckOutcome theorem1_exact(const std::vector<mpq_class>& bs, const PrecisionContext& ctx) {
  constexpr std::size_t order = 30;
  std::string failures;
  for (const auto& b : bs) {
    const Theorem1Outcome o = theorem1_check(b, order);
    if (!o.agree)
      failures += "b=" + b.get_str() + " forms " + o.mismatched_pair + " differ at t^" +
                  std::to_string(*o.first_mismatch) + "; ";
  }
  const std::string all = "three forms equal through t^" + std::to_string(order);
  return exact_outcome(failures.empty(), failures.empty() ? all : failures, all, ctx);
}

Real F(const Real& z, const PrecisionContext& ctx) {
  static const HypergeometricSpec spec{{mpq_class(1, 2), mpq_class(1, 2)}, {mpq_class(1)}};
  return hyp_pfq(spec, z, ctx);
}

// Theorem 1 evaluated numerically at b = 1, t = 1/100.
CheckOutcome theorem1_numeric(const PrecisionContext& base) {
  const auto ctx = base.with_digits(std::max(40, base.digits()));
  PrecisionScope scope(ctx);
  const Real t = Real(1) / 100;
  const Real d1 = (1 + t) * (1 + t);
  const Real u = t / d1;
  Real sum(0), un(1);
  const Real eps = ctx.tolerance(5);
  for (unsigned n = 0;; ++n) {
    mpq_class c = 0, wk = 1;
    for (unsigned k = 0; k <= n; ++k) {
      mpz_class a, b2;
      mpz_bin_uiui(a.get_mpz_t(), n, k);
      mpz_bin_uiui(b2.get_mpz_t(), 2 * k, k);
      a *= b2;
      c += mpq_class(a * a) * wk;
      wk /= 16;  // (b/4)^2 at b = 1
    }
    const Real term = Real(c) * un;
    sum += term;
    if (n > 4 && abs(term) < eps * abs(sum)) break;
    un *= u;
  }
  const Real lhs = sum / d1;
  const Real neg = F(-t * (1 + t), ctx) / sqrt(1 + t) * F(-t * t / (1 + t), ctx);
  const Real D = 1 + t + t * t;
  const Real pos = F(t * (1 + t) / D, ctx) * F(t * t / D, ctx) / D;
  return worst({compare(lhs, neg, ctx), compare(lhs, pos, ctx)});
}

// Constant term of |(1 + x)(1 + y)|^{2n} by repeated multiplication of
// bivariate coefficient arrays.
mpz_class phat_moment_brute(unsigned n) {
  std::vector<std::vector<mpz_class>> c{{1}};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<std::vector<mpz_class>> d(c.size() + 1, std::vector<mpz_class>(c.size() + 1, 0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) d[i + a][j + b] += c[i][j];
    c = std::move(d);
  }
  mpz_class s = 0;
  for (const auto& row : c)
    for (const auto& v : row) s += v * v;
  return s;
}

// 3F2 branch of p4 at x in [2, 4).
Real p4_hypergeometric_branch(const Real& x, const PrecisionContext& ctx) {
  static const HypergeometricSpec spec{{mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)},
                                       {mpq_class(5, 6), mpq_class(7, 6)}};
  const Real r = 16 - x * x;
  const Real z = r * r * r / (108 * pow(x, 4));
  return 2 * sqrt(r) / (ctx.pi() * ctx.pi() * x) * hyp_pfq(spec, min(z, Real(1)), ctx);
}

std::string fmt(double v, int prec = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

CheckOutcome mc_density(DensityId id, const WalkSpec& walk, const CheckEnv& env) {
  constexpr std::uint64_t samples = 1'000'000;
  const McResult r = mc_walk(walk, samples, env.seed);
  const BinTest t = histogram_z(r, bin_masses(id, kHistogramBins));
  const bool ok = t.max_z < 5 && r.min_sample >= 0 && r.max_sample <= walk.support_hi();
  return {"max |z| " + fmt(t.max_z, 4) + " at bin " + std::to_string(t.worst_bin), "max |z| < 5", 0, ok};
}

std::vector<CheckDefinition> build() {
  std::vector<CheckDefinition> R;
  auto add = [&R](std::string id, std::string desc, std::string ref, CheckStatus st, std::function<int(int)> md,
                  CostClass cost, std::function<CheckOutcome(const CheckEnv&)> run) {
    R.push_back({std::move(id), std::move(desc), std::move(ref), st, std::move(md), cost, std::move(run)});
  };
  const auto P = CheckStatus::proven;
  const auto C = CheckStatus::conjectural;
  const auto fast = CostClass::fast, medium = CostClass::medium;

  // Factorisation of the variant moment generating function.
  add("thm1_formal_b4", "variant-walk generating function factorisation, exact through t^30, b = 4",
      "b/((b+t)(1+bt)) sum u^n sum_k C(n,k)^2 C(2k,k)^2 (b/4)^{2k} = F(-t(b+t)) F(-t^2/(1+bt))/sqrt(1+bt) "
      "= F(t(b+t)/D) F(t^2/D)/D, D = 1+bt+t^2",
      P, fixed(0), fast, [](const CheckEnv& e) { return theorem1_exact({mpq_class(4)}, e.ctx); });
  add("thm1_formal_b_rationals", "same factorisation for b = 1, 1/2, 3", "as thm1_formal_b4", P, fixed(0), fast,
      [](const CheckEnv& e) { return theorem1_exact({mpq_class(1), mpq_class(1, 2), mpq_class(3)}, e.ctx); });
  add("thm1_numeric", "b = 1 factorisation summed numerically at t = 1/100 with at least 40 digits",
      "sum_n W~(2n) u^n/((1+t)^2) against both hypergeometric products", P, rel(10), fast,
      [](const CheckEnv& e) { return theorem1_numeric(e.ctx); });

  // Linear Mahler measures.
  add("w2_prime_zero", "W2'(0) = int_0^2 p2 log x dx = 0", "W2'(0) = 0", P, rel(10), fast, [](const CheckEnv& e) {
    return compare(mahler_linear(2, LinearMethod::red1, e.ctx), Real(0), e.ctx);
  });
  add("w3_prime_closed", "int_1^2 p2 log x dx against (3 sqrt3/4 pi) L(chi_-3; 2)", "W3'(0) = L'(chi_-3; -1)", P,
      rel(10), fast, [](const CheckEnv& e) {
        return compare(mahler_linear(3, LinearMethod::red1, e.ctx), lprime_conversion("chi3", 1, e.ctx), e.ctx);
      });
  add("w4_prime_closed", "int_1^3 p3 log x dx against 7 zeta(3)/(2 pi^2)", "W4'(0) = -14 zeta'(-2)", P, rel(10),
      fast, [](const CheckEnv& e) {
        return compare(mahler_linear(4, LinearMethod::red1, e.ctx), zeta3_term(e.ctx), e.ctx);
      });
  add("w5_conjecture", "7 zeta(3)/(2 pi^2) + L'(f3; -1) against int_0^1 p4 log x dx along the imaginary axis",
      "W5'(0) = -L'(f3; -1) = 6 (sqrt15/2pi)^5 L(f3; 4)", C, fixed(8), fast, [](const CheckEnv& e) {
        const Real lhs = zeta3_term(e.ctx) + lprime_conversion("f3", 1, e.ctx);
        const Real rhs = integrate_against_p4([](const Real& x) { return log(x); }, Real(0), Real(1), e.ctx);
        return compare(lhs, rhs, e.ctx);
      });
  add("w5_cross_route", "W5'(0) from int_1^4 p4 log x dx against the imaginary-axis route",
      "W5'(0) = int_1^4 p4 log x dx = 7 zeta(3)/(2 pi^2) - int_0^1 p4 log x dx", P, rel(10), fast,
      [](const CheckEnv& e) {
        return compare(mahler_linear(5, LinearMethod::red1, e.ctx), mahler_linear(5, LinearMethod::modular, e.ctx),
                       e.ctx);
      });
  add("w6_conjecture_modular", "W6'(0) from the two imaginary-axis integrals against -8 L'(f4; -1)",
      "W6'(0) = -8 L'(f4; -1) = 3 (sqrt6/pi)^6 L(f4; 5)", C, fixed(8), fast, [](const CheckEnv& e) {
        return compare(mahler_linear(6, LinearMethod::modular, e.ctx), -8 * lprime_conversion("f4", 1, e.ctx), e.ctx);
      });
  add("w6_via_p3", "2 int_0^3 p3 log x P3 dx and log 3 - int_0^3 P3^2 dx/x against -8 L'(f4; -1)",
      "W6'(0) = 2 int_0^3 p3(x) log x P3(x) dx", C, fixed(8), medium, [](const CheckEnv& e) {
        const Real l = -8 * lprime_conversion("f4", 1, e.ctx);
        return worst({compare(mahler_linear(6, LinearMethod::w6p3, e.ctx), l, e.ctx),
                      compare(mahler_linear(6, LinearMethod::w6p3_squared, e.ctx), l, e.ctx)});
      });
  add("w6_cross_route", "W6'(0): the P3 double integral, the imaginary-axis route and the 3F2-kernel route agree",
      "route consistency for W6'(0)", P, rel(10), medium, [](const CheckEnv& e) {
        const Real m = mahler_linear(6, LinearMethod::modular, e.ctx);
        return worst({compare(mahler_linear(6, LinearMethod::w6p3, e.ctx), m, e.ctx),
                      compare(mahler_linear(6, LinearMethod::red2, e.ctx), m, e.ctx)});
      });

  // Bessel moments against constant terms.
  for (unsigned n = 1; n <= 5; ++n) {
    add("bessel_w3_" + std::to_string(n), "Bessel integral for W3(" + std::to_string(2 * n) + ") against the constant term",
        "W3(2n) = 3^{2n+3/2}/(pi 2^{2n} n!^2) int_0^inf t^{2n+1} I0 K0^2 dt", P, rel(10), fast,
        [n](const CheckEnv& e) {
          return compare(bessel_moment_w3(n, e.ctx), Real(walk_even_moment_ct(3, n)), e.ctx);
        });
    add("bessel_w4_" + std::to_string(n), "Bessel integral for W4(" + std::to_string(2 * n) + ") against the constant term",
        "W4(2n) = 4^{2n+2}/(pi^2 n!^2) int_0^inf t^{2n+1} I0 K0^3 dt", P, rel(10), fast,
        [n](const CheckEnv& e) {
          return compare(bessel_moment_w4(n, e.ctx), Real(walk_even_moment_ct(4, n)), e.ctx);
        });
  }

  // Densities.
  add("mellin_moments", "int x^{2n} p_N dx against W_N(2n) for N = 2, 3, 4 and n = 0..4",
      "W_N(s) = int_0^inf x^s p_N(x) dx", P, rel(10), fast, [](const CheckEnv& e) {
        std::vector<CheckOutcome> parts;
        const std::pair<DensityId, int> ds[] = {{DensityId::p2, 2}, {DensityId::p3, 3}, {DensityId::p4, 4}};
        for (auto [id, N] : ds)
          for (unsigned n = 0; n <= 4; ++n)
            parts.push_back(compare(density_moment(id, Real(2 * n), e.ctx), Real(walk_even_moment_ct(N, n)), e.ctx));
        return worst(parts);
      });
  add("density_normalization", "p2, p3, p4 and p-hat integrate to 1", "int p = 1", P, rel(8), fast,
      [](const CheckEnv& e) {
        std::vector<CheckOutcome> parts;
        for (DensityId id : {DensityId::p2, DensityId::p3, DensityId::p4, DensityId::phat})
          parts.push_back(compare(density_moment(id, Real(0), e.ctx), Real(1), e.ctx));
        return worst(parts);
      });
  add("p4_branch_continuity", "p4 at x = 2 from the 3F2 branch against the imaginary-axis parametrisation",
      "p4(2+) = p4(2-)", P, rel(10), fast, [](const CheckEnv& e) {
        const Real yj = Real(1) / (2 * sqrt(Real(3)));
        return compare(p4_hypergeometric_branch(Real(2), e.ctx), p4_on_axis(yj, e.ctx).p4, e.ctx);
      });
  add("red2_kernel", "int_0^x p2(y)(log x - log y) dy against (x/pi) 3F2(1/2,1/2,1/2; 3/2,3/2; x^2/4)",
      "kernel identity for 0 <= x <= 2, checked at x = 1/2, 1, 3/2, 2", P, rel(8), fast, [](const CheckEnv& e) {
        static const HypergeometricSpec spec{{mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)},
                                             {mpq_class(3, 2), mpq_class(3, 2)}};
        std::vector<CheckOutcome> parts;
        for (int k = 1; k <= 4; ++k) {
          const Real x = Real(k) / 2;
          parts.push_back(
              compare(red2_kernel_quadrature(x, e.ctx), x / e.ctx.pi() * hyp_pfq(spec, x * x / 4, e.ctx), e.ctx));
        }
        return worst(parts);
      });
  add("gs_logmax", "(1/pi) int_0^pi log |x + y e^{it}| dt against max(log x, log y)",
      "checked at (1, 1), (2, 1), (1/3, 5)", P, rel(10), fast, [](const CheckEnv& e) {
        std::vector<CheckOutcome> parts;
        const std::pair<Real, Real> pts[] = {{Real(1), Real(1)}, {Real(2), Real(1)}, {Real(1) / 3, Real(5)}};
        for (const auto& [x, y] : pts) {
          auto [a, b] = gs_logmax_check(x, y, e.ctx);
          parts.push_back(compare(a, b, e.ctx));
        }
        return worst(parts);
      });

  // The variant polynomial and its relatives.
  add("thm2_boyd", "m(1 + x1 + x2 + x3 + x2 x3) as int_0^4 p-hat log x against the printed value and -2 L'(f2; -1)",
      "m(1 + x1 + x2 + x3 + x2 x3) = -2 L'(f2; -1) = 0.4839979734...", C, fixed(10), fast, [](const CheckEnv& e) {
        const Real v = mahler_variant(Real(1), VariantMethod::theorem2, e.ctx);
        return worst({compare_printed(v, "0.4839979734", e.ctx), compare(v, -2 * lprime_conversion("f2", 1, e.ctx), e.ctx)});
      });
  add("variant_b_wan_agree", "general-b integral against the closed form in log and Clausen terms, b = 1/2, 1, 2, 3",
      "two formulas for m(1 + b x1 + x2 + x3 + x2 x3), 0 < b <= 4", P, rel(10), fast, [](const CheckEnv& e) {
        std::vector<CheckOutcome> parts;
        for (const Real& b : {Real(1) / 2, Real(1), Real(2), Real(3)})
          parts.push_back(compare(mahler_variant(b, VariantMethod::general_b, e.ctx),
                                  mahler_variant(b, VariantMethod::wan, e.ctx), e.ctx));
        return worst(parts);
      });
  add("variant_b_jensen", "b = 5: log 5 against int p-hat(x) log max(5, x) dx",
      "m(1 + b x1 + x2 + x3 + x2 x3) = log b for b > 4", P, rel(10), fast, [](const CheckEnv& e) {
        const Real b(5);
        const Real rhs = integrate_against(DensityId::phat, [&](const Real& x) { return log(max(b, x)); }, Real(0),
                                           Real(4), e.ctx);
        return compare(mahler_variant(b, VariantMethod::jensen, e.ctx), rhs, e.ctx);
      });
  add("phat_gamma", "p-hat moments against Gamma(1+s)^2/Gamma(1+s/2)^4, its log moment against 0, and W-hat(2n) = C(2n,n)^2",
      "W-hat(s) = W2(s)^2", P, rel(8), fast, [](const CheckEnv& e) {
        std::vector<CheckOutcome> parts;
        for (int s : {1, 2, 3, 5}) {
          const Real g1 = gamma(Real(1 + s), e.ctx), g2 = gamma(Real(1) + Real(s) / 2, e.ctx);
          parts.push_back(compare(density_moment(DensityId::phat, Real(s), e.ctx), g1 * g1 / pow(g2, 4), e.ctx));
        }
        parts.push_back(compare(density_log_moment(DensityId::phat, e.ctx), Real(0), e.ctx));
        const auto seq = moment_sequence(WalkId::What, 5);
        bool ok = true;
        for (unsigned n = 0; n <= 5; ++n) ok = ok && seq.values[n] == phat_moment_brute(n);
        parts.push_back(exact_outcome(ok, ok ? "W-hat(2n) exact for n <= 5" : "W-hat(2n) mismatch",
                                      "C(2n,n)^2", e.ctx));
        return worst(parts);
      });
  add("thm3_routes", "m((1 + x1)^2 + x2 + x3): integral route against the 5F4 closed form",
      "m((1+x1)^2 + x2 + x3) = 2G/pi + (2/pi^2) int_0^1 arcsin(1-x) arcsin(x) dx/x", P, rel(10), fast,
      [](const CheckEnv& e) {
        return compare(mahler_squared(SquaredMethod::integral, e.ctx), mahler_squared(SquaredMethod::closed_5f4, e.ctx),
                       e.ctx);
      });
  add("thm3_printed", "both routes for m((1 + x1)^2 + x2 + x3) against the printed value",
      "m((1+x1)^2 + x2 + x3) = 0.7025655062...", P, fixed(10), fast, [](const CheckEnv& e) {
        return worst({compare_printed(mahler_squared(SquaredMethod::integral, e.ctx), "0.7025655062", e.ctx),
                      compare_printed(mahler_squared(SquaredMethod::closed_5f4, e.ctx), "0.7025655062", e.ctx)});
      });
  add("thm3_lvalue", "5F4 closed form against (72/pi^4) L(f2_tilde; 3)", "m((1+x1)^2 + x2 + x3) = -L'(f2_tilde; -1)",
      C, fixed(8), fast, [](const CheckEnv& e) {
        return compare(mahler_squared(SquaredMethod::closed_5f4, e.ctx), -lprime_conversion("f2_tilde", 1, e.ctx),
                       e.ctx);
      });
  add("entry30", "G + (pi/4) log 2 against sqrt2 3F2(1/2,1/2,1/2; 3/2,3/2; 1/2)", "Catalan constant 3F2 evaluation",
      P, rel(10), fast, [](const CheckEnv& e) {
        auto [a, b] = entry30_sides(e.ctx);
        return compare(a, b, e.ctx);
      });

  // The L(f2) ladder.
  add("L15_0", "(1/2) int_0^1 F(x^2/16) dx against (1/2) 3F2(1/2,1/2,1/2; 1,3/2; 1/16) and 2 L'(f2; 0)",
      "first ladder step", P, rel(10), fast, [](const CheckEnv& e) {
        const Real i0 = ladder_integral(0, e.ctx);
        return worst({compare(i0, ladder_hypergeometric0(e.ctx), e.ctx),
                      compare(i0, 2 * lprime_conversion("f2", 0, e.ctx), e.ctx)});
      });
  add("L15_1", "(1/2 pi) int_0^1 F(1 - x^2/16) log x dx against 2 L'(f2; -1)", "second ladder step", C, fixed(8),
      fast, [](const CheckEnv& e) {
        return compare(ladder_integral(1, e.ctx), 2 * lprime_conversion("f2", 1, e.ctx), e.ctx);
      });
  add("L15_2", "(6/pi^2) int_0^1 F(x^2/16) log^2 x dx against 2 L'(f2; -2)", "third ladder step", C, fixed(8), fast,
      [](const CheckEnv& e) {
        return compare(ladder_integral(2, e.ctx), 2 * lprime_conversion("f2", 2, e.ctx), e.ctx);
      });
  add("L15_2_printed", "third ladder integral against the printed value", "2 L'(f2; -2) = 1.2165632526...", C,
      fixed(10), fast, [](const CheckEnv& e) { return compare_printed(ladder_integral(2, e.ctx), "1.2165632526", e.ctx); });
  add("zu13_4f3", "three-term 4F3(...; 1) combination against (128/pi^4) L(f2_hat; 3)",
      "-L'(f2_hat; -1) = (128/pi^4) L(f2_hat; 3)", P, rel(10), fast, [](const CheckEnv& e) {
        return compare(zu13_combination(e.ctx), -lprime_conversion("f2_hat", 1, e.ctx), e.ctx);
      });
  add("bz02_eta_integral", "(2 pi/9) int_0^inf (1 - eta(it)^9/eta(3it)^3) dt against L'(chi_-3; -1)",
      "int_0^1 (1/9)(1 - eta^9/eta_3^3) dq/q = L'(chi_-3; -1)", P, rel(10), fast, [](const CheckEnv& e) {
        return compare(bz02_integral(e.ctx), lprime_conversion("chi3", 1, e.ctx), e.ctx);
      });

  // Modular parametrisation of p3.
  add("p3_modular_consistency", "p3 from eta quotients at x(iy) against the 2F1 formula, y = 0.3, 0.5, 0.8",
      "p3(x) = (2 sqrt3/pi) eta(2t)^2 eta(6t)^2/(eta(t) eta(3t))", P, rel(8), fast, [](const CheckEnv& e) {
        std::vector<CheckOutcome> parts;
        for (const char* y : {"0.3", "0.5", "0.8"}) {
          const P3Point p = p3_parametrisation(Real(y), e.ctx);
          parts.push_back(compare(p.p3, density(DensityId::p3, p.x, e.ctx), e.ctx));
        }
        return worst(parts);
      });
  add("P3_eisenstein", "P3(x(iy)) from the Eisenstein q-series against quadrature of p3 in x; P3(1) two ways",
      "P3(x) = 6 i sqrt3 int_{i inf}^tau (E3(t) - 8 E3(2t)) dt", P, rel(8), fast, [](const CheckEnv& e) {
        std::vector<CheckOutcome> parts;
        for (const char* ys : {"0.25", "0.35", "0.5", "0.7", "1.0"}) {
          const Real y(ys);
          parts.push_back(compare(p3_cumulative_series(y, e.ctx),
                                  cumulative_P3(x_on_axis(AxisMap::p3, y, e.ctx), e.ctx), e.ctx));
        }
        parts.push_back(compare(p3_cumulative_integral(Real("0.5"), e.ctx), p3_cumulative_series(Real("0.5"), e.ctx), e.ctx));
        parts.push_back(compare(P3_at_one_modular(e.ctx), cumulative_P3(Real(1), e.ctx), e.ctx));
        return worst(parts);
      });
  add("p3_dx_identity", "term-wise dx/dtau against 3 pi i eta(t)^6 eta(3t)^2 eta(6t)^2/eta(2t)^6",
      "dx = 3 pi i eta^6 eta_3^2 eta_6^2/eta_2^6 dtau", P, rel(8), fast, [](const CheckEnv& e) {
        const EtaQuotient x3 = named_quotient("x3"), dx3 = named_quotient("dx3");
        std::vector<CheckOutcome> parts;
        for (const Complex& t : {itau(Real("0.3")), itau(Real("0.6")), itau(Real(1)), Complex(Real("0.2"), Real("0.5"))})
          parts.push_back(
              compare_complex(x3.derivative(t, e.ctx), Complex(Real(0), 3 * e.ctx.pi()) * dx3.eval(t, e.ctx), e.ctx));
        return worst(parts);
      });
  add("p3_product_formula", "P3 from the infinite product with principal logarithms against the q-series, y = 0.5",
      "product form of P3 (normalised so that both sides agree at the cusp)", P, rel(8), fast,
      [](const CheckEnv& e) {
        const Real y("0.5");
        return compare(p3_cumulative_product(y, e.ctx), p3_cumulative_series(y, e.ctx), e.ctx);
      });

  // Modular parametrisation of p4.
  add("p4_modular_consistency",
      "p4 on the arc against the 3F2 branch, and the upper imaginary-axis leg against direct eta evaluation on the "
      "lower leg",
      "p4(x(tau)) = -(12 i tau/pi) p(tau) on the axis, Re(-2i(1 + 6 tau + 12 tau^2) p(tau)/pi) on the arc", P, rel(8),
      fast, [](const CheckEnv& e) {
        std::vector<CheckOutcome> parts;
        for (const char* th : {"0.6", "0.7", "0.8"}) {
          const P4Point p = p4_on_arc(Real(th), e.ctx);
          const Real r = 16 - p.x * p.x;
          if (!(r * r * r / (108 * pow(p.x, 4)) < Real("0.98")))
            fail(Errc::domain_error, "arc sample too close to x = 2 for the 3F2 series");
          parts.push_back(compare(p.p4, p4_hypergeometric_branch(p.x, e.ctx), e.ctx));
        }
        const EtaQuotient pw = named_quotient("p4_weight");
        for (const char* ys : {"0.4", "0.6", "1.0"}) {
          const Real y(ys);
          const Real yl = 1 / (12 * y);
          const Complex t = itau(yl);
          const Real lower = (Complex(Real(0), -12 / e.ctx.pi()) * t * pw.eval(t, e.ctx)).real();
          parts.push_back(compare(p4_on_axis(y, e.ctx).p4, lower, e.ctx));
        }
        return worst(parts);
      });
  add("p4_fixed_point", "x(i/(2 sqrt15)) = 1 and x(i/(2 sqrt3)) = 2", "x(i/(2 sqrt15)) = 1; i/(2 sqrt3) fixed by w12",
      P, rel(8), fast, [](const CheckEnv& e) {
        return worst({compare(p4_on_axis(1 / (2 * sqrt(Real(15))), e.ctx).x, Real(1), e.ctx),
                      compare(p4_on_axis(1 / (2 * sqrt(Real(3))), e.ctx).x, Real(2), e.ctx)});
      });
  add("atkin_lehner", "x(w12 t) = x(t), x(w6 t) = -8/x(t), p(w12 t) = -12 t^2 p(t) at three sample points",
      "Atkin-Lehner involutions w12: t -> -1/(12t), w6: t -> (6t-5)/(12t-6)", P, rel(8), fast,
      [](const CheckEnv& e) {
        const auto r = atkin_lehner_checks(
            {Complex(Real("0.1"), Real("0.4")), Complex(Real("-0.2"), Real("0.3")), Complex(Real("0.05"), Real("0.25"))},
            e.ctx);
        return CheckOutcome{"min digits over " + std::to_string(r.relations.size()) + " relations",
                            "unscaled -t^2 p(t) form: " + std::to_string(r.unscaled_form_digits) + " digits",
                            r.min_digits, std::nullopt};
      });
  add("reflection_integral", "int_0^{1/(2 sqrt3)} y p(iy) log x dx(iy) against minus the same integral above",
      "change of variable y -> 1/(12 y)", P, rel(10), fast, [](const CheckEnv& e) {
        auto [a, b] = reflection_integral_sides(e.ctx);
        return compare(a, b, e.ctx);
      });

  // Level 8.
  add("level8_identities", "1 - x^2/16, F(x^2/16) as eta quotients and F(1 - x^2/16) = -2 i tau F(x^2/16)",
      "x = 16 (eta(t) eta(4t)^2/eta(2t)^3)^4, checked at y = 0.5, 1, 1.3", P, rel(8), fast, [](const CheckEnv& e) {
        int lo = 1 << 20;
        for (const char* y : {"0.5", "1", "1.3"}) {
          const Level8Point p = level8_parametrisation(Real(y), e.ctx);
          lo = std::min({lo, p.complement_digits, p.f_digits, p.relation_digits});
        }
        return CheckOutcome{"min digits over 9 identities", "", lo, std::nullopt};
      });
  add("tau0_locate", "root of x(iy) = 1 for the level 8 function against the printed value",
      "tau0 = 0.8774376613482... i", P, fixed(13), fast, [](const CheckEnv& e) {
        return compare_printed(invert_x_on_axis(AxisMap::level8, Real(1), e.ctx), "0.8774376613482", e.ctx);
      });

  // Eisenstein series.
  add("eisenstein_eta_identities",
      "E3 = eta(3t)^9/eta(t)^3, E3~ = eta(t)^9/eta(3t)^3, E3(t) - 8 E3(2t) = eta^5 eta_3 eta_6^4/eta_2^4",
      "weight 3 chi_-3 Eisenstein series as eta quotients", P, rel(8), fast, [](const CheckEnv& e) {
        const EtaQuotient e3({{3, 9}, {1, -3}}), e3t({{1, 9}, {3, -3}}), combo = named_quotient("eis3_combo");
        std::vector<CheckOutcome> parts;
        for (const Complex& t : {itau(Real("0.7")), Complex(Real("0.1"), Real("0.6"))}) {
          parts.push_back(compare_complex(eisenstein(EisensteinKind::E3_chi3, t, e.ctx), e3.eval(t, e.ctx), e.ctx));
          parts.push_back(
              compare_complex(eisenstein(EisensteinKind::E3_chi3_tilde, t, e.ctx), e3t.eval(t, e.ctx), e.ctx));
          const Complex d = eisenstein(EisensteinKind::E3_chi3, t, e.ctx) -
                            Real(8) * eisenstein(EisensteinKind::E3_chi3, Real(2) * t, e.ctx);
          parts.push_back(compare_complex(d, combo.eval(t, e.ctx), e.ctx));
        }
        return worst(parts);
      });
  add("eisenstein_transform", "E3(-1/(3t)) against (i t^3/(3 sqrt3)) E3~(t) at t = i and t = 0.2 + 0.8i",
      "E3(-1/(3t)) = i t^3/(3 sqrt3) E3~(t)", P, rel(8), fast, [](const CheckEnv& e) {
        std::vector<CheckOutcome> parts;
        for (const Complex& t : {itau(Real(1)), Complex(Real("0.2"), Real("0.8"))}) {
          const Complex lhs = eisenstein(EisensteinKind::E3_chi3, Complex(-1) / (Real(3) * t), e.ctx);
          const Complex rhs = Complex(Real(0), 1 / (3 * sqrt(Real(3)))) * pow(t, 3) *
                              eisenstein(EisensteinKind::E3_chi3_tilde, t, e.ctx);
          parts.push_back(compare_complex(lhs, rhs, e.ctx));
        }
        return worst(parts);
      });
  add("logderiv_E1", "(1/2 pi i) x'/x for the p3 map against its eta form and against E1 squared",
      "(1/2 pi i) dx/(x dt) = (1/2)(eta^2 eta_3^2/(eta_2 eta_6))^2 = (1/18)(E1(t) - 4 E1(4t))^2", P, rel(8), fast,
      [](const CheckEnv& e) {
        const EtaQuotient x3 = named_quotient("x3"), ld = named_quotient("logderiv3");
        std::vector<CheckOutcome> parts;
        for (const Complex& t : {itau(Real("0.4")), Complex(Real("0.15"), Real("0.5"))}) {
          const Complex lhs = x3.derivative(t, e.ctx) / x3.eval(t, e.ctx) / Complex(Real(0), 2 * e.ctx.pi());
          parts.push_back(compare_complex(lhs, ld.eval(t, e.ctx), e.ctx));
          const Complex s = eisenstein(EisensteinKind::E1_chi3, t, e.ctx) -
                            Real(4) * eisenstein(EisensteinKind::E1_chi3, Real(4) * t, e.ctx);
          parts.push_back(compare_complex(lhs, s * s / Real(18), e.ctx));
        }
        return worst(parts);
      });

  // Monte Carlo.
  add("mc_variant_moments", "10^6 samples of |1 + e1 + e2 + e3 + e2 e3|: moments 2 and 4 within 4 standard errors of 5 and 53",
      "W~(2n) = sum_k C(n,k)^2 C(2k,k)^2", P, fixed(0), fast, [](const CheckEnv& e) {
        constexpr std::uint64_t samples = 1'000'000;
        const McResult r = mc_walk(WalkSpec::variant(1), samples, e.seed);
        const McResult again = mc_walk(WalkSpec::variant(1), samples, e.seed, 3);
        const double w2 = variant_even_moment(1).get_d(), w4 = variant_even_moment(2).get_d();
        const double z2 = std::abs(r.moments[1] - w2) / r.std_errors[1];
        const double z4 = std::abs(r.moments[2] - w4) / r.std_errors[2];
        const bool same = again.moments == r.moments && again.histogram == r.histogram;
        const bool ok = z2 < 4 && z4 < 4 && same;
        return CheckOutcome{fmt(r.moments[1], 8) + " (se " + fmt(r.std_errors[1], 3) + "); " + fmt(r.moments[2], 8) +
                                " (se " + fmt(r.std_errors[2], 3) + ")" + (same ? "" : "; rerun differs"),
                            fmt(w2) + "; " + fmt(w4), 0, ok};
      });
  add("mc_density_p3", "3-step walk histogram against bin masses of p3 (binomial z < 5 in every bin)",
      "p3 is the density of the 3-step distance", P, fixed(0), medium,
      [](const CheckEnv& e) { return mc_density(DensityId::p3, WalkSpec::standard(3), e); });
  add("mc_density_p4", "4-step walk histogram against bin masses of p4", "p4 is the density of the 4-step distance", P,
      fixed(0), medium, [](const CheckEnv& e) { return mc_density(DensityId::p4, WalkSpec::standard(4), e); });
  add("mc_density_phat", "|(1 + e1)(1 + e2)| histogram against bin masses of p-hat",
      "p-hat is the density of |(1 + x2)(1 + x3)| on the torus", P, fixed(0), medium,
      [](const CheckEnv& e) { return mc_density(DensityId::phat, WalkSpec::phat(), e); });

  std::sort(R.begin(), R.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return R;
}

}  // namespace

const std::vector<CheckDefinition>& registry() {
  static const std::vector<CheckDefinition> r = build();
  return r;
}

const std::vector<CoverageItem>& coverage_table() {
  static const std::vector<CoverageItem> t = {
      {"variant generating function factorisation", {"thm1_formal_b4", "thm1_formal_b_rationals", "thm1_numeric"}},
      {"W2'(0), W3'(0), W4'(0)", {"w2_prime_zero", "w3_prime_closed", "w4_prime_closed"}},
      {"W5'(0) and W6'(0) L-value conjectures", {"w5_conjecture", "w6_conjecture_modular", "w6_via_p3"}},
      {"W5'(0) and W6'(0) route consistency", {"w5_cross_route", "w6_cross_route"}},
      {"Bessel moment integrals",
       {"bessel_w3_1", "bessel_w3_2", "bessel_w3_3", "bessel_w3_4", "bessel_w3_5", "bessel_w4_1", "bessel_w4_2",
        "bessel_w4_3", "bessel_w4_4", "bessel_w4_5"}},
      {"Mellin transform of the densities", {"mellin_moments", "density_normalization"}},
      {"p4 on both sides of x = 2", {"p4_branch_continuity"}},
      {"3F2 kernel for p2", {"red2_kernel"}},
      {"logarithmic mean over the circle", {"gs_logmax"}},
      {"m(1 + x1 + x2 + x3 + x2 x3)", {"thm2_boyd"}},
      {"b-deformed variant", {"variant_b_wan_agree", "variant_b_jensen"}},
      {"p-hat moments", {"phat_gamma"}},
      {"m((1 + x1)^2 + x2 + x3)", {"thm3_routes", "thm3_printed", "thm3_lvalue", "entry30"}},
      {"L(f2) ladder", {"L15_0", "L15_1", "L15_2", "L15_2_printed"}},
      {"4F3 evaluation of L(f2_hat; 3)", {"zu13_4f3"}},
      {"eta integral for L'(chi_-3; -1)", {"bz02_eta_integral"}},
      {"p3 modular parametrisation", {"p3_modular_consistency", "P3_eisenstein", "p3_dx_identity", "p3_product_formula"}},
      {"p4 modular parametrisation", {"p4_modular_consistency", "p4_fixed_point", "atkin_lehner", "reflection_integral"}},
      {"level 8 parametrisation", {"level8_identities", "tau0_locate"}},
      {"chi_-3 Eisenstein series", {"eisenstein_eta_identities", "eisenstein_transform", "logderiv_E1"}},
      {"Monte Carlo walks", {"mc_variant_moments", "mc_density_p3", "mc_density_p4", "mc_density_phat"}},
  };
  return t;
}

}  // namespace walklab
