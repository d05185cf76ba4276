#pragma once

#include <cstdint>
#include <functional>
#include <string>

// Closed-form asymptotics: h_n growth, the log Y_n moment generating
// function, the CLT constants K/F/G/H with the Poisson-functional centering
// they are compared against, the leading moment formulas for T_{0b}/T_{bn},
// the total-variation rate bound, and a generic numeric saddle solver.

namespace permlab {

struct HnAsymptotic {
  double log_value = 0.0;    // log of the asymptotic h_n expression
  double error_scale = 0.0;  // n^{-gamma/(1+gamma)}
};

// log h_n ~ -log(2 pi Gamma(2+gamma))/2
//           + (2+gamma)/(2(1+gamma)) log(Gamma(1+gamma)/n)
//           + (1+gamma)/gamma Gamma(1+gamma)^{1/(1+gamma)} n^{gamma/(1+gamma)}
//           + zeta(1-gamma)
// The zeta term is finite for every gamma > 0 (gamma = 1 gives zeta(0) = -1/2).
HnAsymptotic hn_asymptotic(double gamma, std::int64_t n);

// log E[exp(s log Y_n)], uniform in s on bounded sets with s > -gamma;
// exactly 0 at s = 0.
double mgf_logy_asymptotic(double gamma, std::int64_t n, double s);

struct ErdosTuranConstants {
  double K = 0.0;
  double F = 0.0;  // F(n) = K/(1+gamma)^3 n^{gamma/(1+gamma)} log^2 n
  double G = 0.0;  // G(n) = K/(1+gamma) n^{gamma/(1+gamma)} log n + n^{..} H
  double H = 0.0;  // K (digamma(gamma) - log Gamma(1+gamma)/(1+gamma))
};

// K(gamma) alone; defined for every gamma > 0
double erdos_turan_K(double gamma);

// CLT centering/scaling; restricted to 0 < gamma < 1, the regime where the
// law for log O_n holds (the gamma >= 1 behavior is open).
ErdosTuranConstants erdos_turan_constants(double gamma, std::int64_t n);

struct PoissonCentering {
  double tilde_G = 0.0;
  double tilde_H = 0.0;  // -K log(Gamma(1+gamma)) / (1+gamma)
};

// centering of the independent-Poisson functional log P_n; the gap
// G(n) - tilde_G(n) = n^{gamma/(1+gamma)} K digamma(gamma) is what makes the
// naive Poisson route fail at the sqrt(F) scale
PoissonCentering poisson_functional_centering(double gamma, std::int64_t n);

struct Lemma31Moments {
  double mu_0b = 0.0;
  double var_0b = 0.0;
  double mu_bn = 0.0;
  double var_bn = 0.0;
  double scale_mu_0b = 0.0;   // O(b^gamma)
  double scale_var_0b = 0.0;  // O(b^{1+gamma})
  double scale_mu_bn = 0.0;   // O(n^{gamma/(1+gamma)})
  double scale_var_bn = 0.0;  // O(n)
};

// leading expressions for the T_{0b} / T_{bn} means and variances, with the
// stated error scales attached
Lemma31Moments lemma31_asymptotic(double gamma, std::int64_t n, std::int64_t b);

// b^{2+gamma} n^{-(2+gamma)/(1+gamma)} + b^{-gamma/6} + n^{-gamma/(1+gamma)},
// unit constants; experiments fit the actual constant
double tv_rate_bound(double gamma, std::int64_t n, std::int64_t b);

struct SaddleSolution {
  double r = 0.0;
  double alpha = 0.0;    // r g'(r)
  double beta = 0.0;     // r g'(r) + r^2 g''(r)
  double g_value = 0.0;  // g(r)
};

struct GDerivatives {
  double g = 0.0;
  double gp = 0.0;
  double gpp = 0.0;
};
using GEvaluator = std::function<GDerivatives(double r)>;

// Bisection in -log(1-r) until |alpha(r) - target| <= 0.25 sqrt(beta(r)),
// assuming alpha is increasing on (0, 1). Throws on bracketing failure.
SaddleSolution solve_saddle_numeric(const GEvaluator& eval, double target_n);

// evaluator for g(t) = Li_a(t) via the direct series (a = 1 - gamma - s)
GEvaluator polylog_g_evaluator(double a);

// JSON object {gamma, n, K, F, G, H, tildeG, tildeH}
std::string erdos_turan_constants_json(double gamma, std::int64_t n);

}  // namespace permlab
