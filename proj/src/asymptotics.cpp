#include "permlab/asymptotics.hpp"

#include <cmath>

#include <json.hpp>

#include "permlab/errors.hpp"
#include "permlab/special.hpp"

namespace permlab {

HnAsymptotic hn_asymptotic(double gamma, std::int64_t n) {
  if (!(gamma > 0.0)) throw config_error("hn_asymptotic: gamma must be > 0");
  if (n < 1) throw config_error("hn_asymptotic: n must be >= 1");
  const double g1 = std::tgamma(1.0 + gamma);
  const double expo = gamma / (1.0 + gamma);
  HnAsymptotic out;
  out.log_value = -0.5 * std::log(2.0 * M_PI * std::tgamma(2.0 + gamma)) +
                  (2.0 + gamma) / (2.0 * (1.0 + gamma)) * std::log(g1 / n) +
                  (1.0 + gamma) / gamma * std::pow(g1, 1.0 / (1.0 + gamma)) *
                      std::pow(static_cast<double>(n), expo) +
                  riemann_zeta(1.0 - gamma);
  out.error_scale = std::pow(static_cast<double>(n), -expo);
  return out;
}

namespace {

// gtilde_{1,s} = (1+gamma+s) Gamma(gamma+s) / Gamma(1+gamma+s)^{1-1/(1+gamma+s)}
double gtilde1(double gamma, double s) {
  const double q = 1.0 + gamma + s;
  return q * std::tgamma(gamma + s) / std::pow(std::tgamma(q), 1.0 - 1.0 / q);
}

}  // namespace

double mgf_logy_asymptotic(double gamma, std::int64_t n, double s) {
  if (!(gamma > 0.0))
    throw config_error("mgf_logy_asymptotic: gamma must be > 0");
  if (!(s > -gamma))
    throw config_error("mgf_logy_asymptotic: requires s > -gamma");
  const double q = 1.0 + gamma + s;
  const double q0 = 1.0 + gamma;
  const double nn = static_cast<double>(n);
  // gtilde_{2,s} = (1+gamma) Gamma(q)^{1/q} / (q Gamma(1+gamma)^{1/(1+gamma)})
  const double g2 = q0 * std::pow(std::tgamma(q), 1.0 / q) /
                    (q * std::pow(std::tgamma(q0), 1.0 / q0));
  const double zeta_term =
      (s == 0.0) ? 0.0 : riemann_zeta(1.0 - s - gamma) - riemann_zeta(1.0 - gamma);
  return 0.5 * std::log(g2) +
         0.5 * (1.0 / q0 - 1.0 / q) * std::log(nn) +
         gtilde1(gamma, s) * std::pow(nn, 1.0 - 1.0 / q) -
         gtilde1(gamma, 0.0) * std::pow(nn, 1.0 - 1.0 / q0) + zeta_term;
}

double erdos_turan_K(double gamma) {
  if (!(gamma > 0.0)) throw config_error("erdos_turan_K: gamma must be > 0");
  return std::tgamma(gamma) *
         std::pow(std::tgamma(1.0 + gamma), -gamma / (1.0 + gamma));
}

ErdosTuranConstants erdos_turan_constants(double gamma, std::int64_t n) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw config_error(
        "erdos_turan_constants: unsupported regime, requires 0 < gamma < 1 "
        "(the gamma >= 1 behavior is open)");
  if (n < 1) throw config_error("erdos_turan_constants: n must be >= 1");
  const double nn = static_cast<double>(n);
  const double npow = std::pow(nn, gamma / (1.0 + gamma));
  const double logn = std::log(nn);
  ErdosTuranConstants c;
  c.K = erdos_turan_K(gamma);
  c.F = c.K / std::pow(1.0 + gamma, 3.0) * npow * logn * logn;
  c.H = c.K * (digamma(gamma) -
               std::log(std::tgamma(1.0 + gamma)) / (1.0 + gamma));
  c.G = c.K / (1.0 + gamma) * npow * logn + npow * c.H;
  return c;
}

PoissonCentering poisson_functional_centering(double gamma, std::int64_t n) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw config_error(
        "poisson_functional_centering: requires 0 < gamma < 1");
  const double nn = static_cast<double>(n);
  const double npow = std::pow(nn, gamma / (1.0 + gamma));
  const double K = erdos_turan_K(gamma);
  PoissonCentering c;
  c.tilde_H = -K * std::log(std::tgamma(1.0 + gamma)) / (1.0 + gamma);
  c.tilde_G = K / (1.0 + gamma) * npow * std::log(nn) + npow * c.tilde_H;
  return c;
}

Lemma31Moments lemma31_asymptotic(double gamma, std::int64_t n,
                                  std::int64_t b) {
  if (!(gamma > 0.0))
    throw config_error("lemma31_asymptotic: gamma must be > 0");
  if (n < 1 || b < 1 || b > n)
    throw config_error("lemma31_asymptotic: need 1 <= b <= n");
  const double nn = static_cast<double>(n);
  const double bb = static_cast<double>(b);
  const double g1 = std::tgamma(1.0 + gamma);
  const double eta = std::pow(nn / g1, -1.0 / (1.0 + gamma));
  const double y = bb * eta;
  const double s1 = sigma_series(2, 1.0 + gamma, y);
  const double s2 = sigma_series(2, 2.0 + gamma, y);
  const double scale1 = nn / g1;
  const double scale2 = std::pow(nn / g1, (2.0 + gamma) / (1.0 + gamma));

  Lemma31Moments out;
  out.mu_0b = std::pow(bb, 1.0 + gamma) / (1.0 + gamma) - scale1 * s1;
  out.var_0b = std::pow(bb, 2.0 + gamma) / (2.0 + gamma) - scale2 * s2;
  out.mu_bn = nn - std::pow(bb, 1.0 + gamma) / (1.0 + gamma) + scale1 * s1;
  out.var_bn = (1.0 + gamma) * std::pow(g1, -1.0 / (1.0 + gamma)) *
                   std::pow(nn, (2.0 + gamma) / (1.0 + gamma)) -
               std::pow(bb, 2.0 + gamma) / (2.0 + gamma) + scale2 * s2;
  out.scale_mu_0b = std::pow(bb, gamma);
  out.scale_var_0b = std::pow(bb, 1.0 + gamma);
  out.scale_mu_bn = std::pow(nn, gamma / (1.0 + gamma));
  out.scale_var_bn = nn;
  return out;
}

double tv_rate_bound(double gamma, std::int64_t n, std::int64_t b) {
  const double nn = static_cast<double>(n);
  const double bb = static_cast<double>(b);
  return std::pow(bb, 2.0 + gamma) *
             std::pow(nn, -(2.0 + gamma) / (1.0 + gamma)) +
         std::pow(bb, -gamma / 6.0) + std::pow(nn, -gamma / (1.0 + gamma));
}

SaddleSolution solve_saddle_numeric(const GEvaluator& eval, double target_n) {
  if (!(target_n >= 1.0))
    throw config_error("solve_saddle_numeric: target must be >= 1");
  // parametrize r = 1 - exp(-u); alpha(r) increases with u
  auto alpha_at = [&](double u) {
    const double r = -std::expm1(-u);
    const GDerivatives d = eval(r);
    return r * d.gp;
  };
  double u_lo = 1e-8;
  double u_hi = 1.0;
  int guard = 0;
  while (alpha_at(u_hi) < target_n) {
    u_lo = u_hi;
    u_hi *= 2.0;
    if (++guard > 60)
      throw numeric_error("solve_saddle_numeric: bracketing failure");
  }
  if (alpha_at(u_lo) > target_n) {
    u_lo = 1e-14;
    if (alpha_at(u_lo) > target_n)
      throw numeric_error("solve_saddle_numeric: bracketing failure at r ~ 0");
  }
  for (int it = 0; it < 200; ++it) {
    const double u = 0.5 * (u_lo + u_hi);
    const double r = -std::expm1(-u);
    const GDerivatives d = eval(r);
    const double alpha = r * d.gp;
    const double beta = r * d.gp + r * r * d.gpp;
    if (std::abs(alpha - target_n) <= 0.25 * std::sqrt(beta))
      return {r, alpha, beta, d.g};
    if (alpha < target_n)
      u_lo = u;
    else
      u_hi = u;
  }
  throw numeric_error("solve_saddle_numeric: tolerance not reached");
}

GEvaluator polylog_g_evaluator(double a) {
  return [a](double r) {
    GDerivatives d;
    d.g = polylog(a, r);
    const double li1 = polylog(a - 1.0, r);
    const double li2 = polylog(a - 2.0, r);
    d.gp = li1 / r;
    d.gpp = (li2 - li1) / (r * r);
    return d;
  };
}

std::string erdos_turan_constants_json(double gamma, std::int64_t n) {
  const ErdosTuranConstants c = erdos_turan_constants(gamma, n);
  const PoissonCentering t = poisson_functional_centering(gamma, n);
  nlohmann::ordered_json j;
  j["gamma"] = gamma;
  j["n"] = n;
  j["K"] = c.K;
  j["F"] = c.F;
  j["G"] = c.G;
  j["H"] = c.H;
  j["tildeG"] = t.tilde_G;
  j["tildeH"] = t.tilde_H;
  return j.dump();
}

}  // namespace permlab
