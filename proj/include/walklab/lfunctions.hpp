#pragma once

// Eta-product cusp forms, their L-values at integer points, the Dirichlet
// L-function of chi_{-3}, and the conversions between L(f; s) and the
// derivatives L'(f; -k) at negative integers.

#include <cstdint>
#include <string>
#include <vector>

#include "walklab/modular.hpp"
#include "walklab/precision.hpp"

namespace walklab {

// A cusp form given as a sum of eta products, each normalised so that the
// sum starts with q^1.
struct CuspFormSpec {
  std::string name;
  std::vector<EtaQuotient> terms;
  int level;
  int weight;
};

// "f2", "f2_tilde", "f2_hat", "f3", "f4". Errc::not_found otherwise.
const CuspFormSpec& cusp_form(const std::string& name);
std::vector<std::string> cusp_form_names();

// a_0..a_{n_max} (a_0 = 0) by sparse multiplication with the pentagonal
// series. Cached per form; safe to call concurrently.
std::vector<std::int64_t> qexp(const CuspFormSpec& form, std::size_t n_max);

// f(tau) as the sum of the eta products.
Complex cusp_form_eval(const CuspFormSpec& form, const Complex& tau, const PrecisionContext& ctx);

// f(i/(N y)) / (N^{k/2} y^k f(iy)), i.e. the Fricke involution
// f(-1/(N tau)) = eps N^{k/2} (-i tau)^k f(tau) evaluated at tau = i y.
Real fricke_ratio(const CuspFormSpec& form, const Real& y, const PrecisionContext& ctx);
// The sign eps, derived from fricke_ratio at y = 0.3, 0.7, 1.2 on first use
// and cached. Errc::no_convergence if the ratio is not +-1.
int fricke_sign(const CuspFormSpec& form);

// sum_{n>=1} chi_{-3}(n) n^{-s} for integer s >= 1 (Euler-Maclaurin on the
// period-3 blocks).
Real dirichlet_L_chi3(int s, const PrecisionContext& ctx);

// Upper incomplete gamma Gamma(a, x) for integer a and x > 0.
Real incomplete_gamma(int a, const Real& x, const PrecisionContext& ctx);

// L(f; s) for integer s >= 1 from the completed integral
// int_0^inf f(it) t^{s-1} dt split at t0 (default 1/sqrt N). The two halves
// are incomplete gamma sums over the q-expansion.
Real cusp_L(const CuspFormSpec& form, int s, const PrecisionContext& ctx);
Real cusp_L(const CuspFormSpec& form, int s, const Real& t0, const PrecisionContext& ctx);

// Truncated Dirichlet series sum_{n <= n_max} a_n n^{-s}.
Real cusp_L_direct(const CuspFormSpec& form, int s, std::size_t n_max, const PrecisionContext& ctx);

// L'(f; -k) from the constant multiple of an L-value in the right half
// plane. form is "chi3" or a cusp form name. Supported pairs:
//   chi3 k=1, f3 k=1, f4 k=1, f2 k=0,1,2, f2_tilde k=1, f2_hat k=1.
// Errc::not_found for anything else.
Real lprime_conversion(const std::string& form, int k, const PrecisionContext& ctx);

}  // namespace walklab
