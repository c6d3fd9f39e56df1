#include "gkf/special_fn.hpp"

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <stdexcept>

namespace gkf {

namespace {
constexpr double kSqrt2Pi = 2.506628274631000502415765284811;
}

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
  if (n == 0) return 1.0;
  double h_prev = 1.0, h = x;
  for (int m = 1; m < n; ++m) {
    double h_next = x * h - m * h_prev;
    h_prev = h;
    h = h_next;
  }
  return h;
}

double gauss_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

double gauss_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double unit_ball_volume(int k) {
  if (k < 0) throw std::invalid_argument("unit_ball_volume: k must be >= 0");
  return std::pow(M_PI, 0.5 * k) / std::tgamma(0.5 * k + 1.0);
}

double flag_coeff(int k, int i) {
  if (i < 0 || k < 0 || i > k)
    throw std::invalid_argument("flag_coeff: requires 0 <= i <= k");
  return binomial(k, i) * unit_ball_volume(k) /
         (unit_ball_volume(i) * unit_ball_volume(k - i));
}

double beta_fn(double nu1, double nu2) {
  return std::exp(gsl_sf_lnbeta(nu1, nu2));
}

double incomplete_beta(double nu1, double nu2, double x) {
  if (nu1 <= 0.0 || nu2 <= 0.0)
    throw std::invalid_argument("incomplete_beta: nu1, nu2 must be positive");
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("incomplete_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return beta_fn(nu1, nu2);
  return gsl_sf_beta_inc(nu1, nu2, x) * beta_fn(nu1, nu2);
}

double chi_density(int k, double t) {
  if (k < 1) throw std::invalid_argument("chi_density: k must be >= 1");
  if (t <= 0.0) throw std::domain_error("chi_density: t must be positive");
  return std::pow(t, k - 1) * std::exp(-0.5 * t * t) /
         (std::tgamma(0.5 * k) * std::pow(2.0, 0.5 * (k - 2)));
}

double chi_density_derivative(int k, int j, double t) {
  if (k < 1 || j < 1)
    throw std::invalid_argument("chi_density_derivative: k, j must be >= 1");
  if (t <= 0.0)
    throw std::domain_error("chi_density_derivative: t must be positive");
  double sum = 0.0;
  for (int l = 0; 2 * l <= j - 1; ++l) {
    for (int m = 0; m <= j - 1 - 2 * l; ++m) {
      double binom = binomial(k - 1, j - 1 - m - 2 * l);
      if (binom == 0.0) continue;  // covers the k >= j - m - 2l indicator
      double sign = ((m + l) % 2 == 0) ? 1.0 : -1.0;
      sum += binom * sign * factorial(j - 1) /
             (factorial(m) * factorial(l) * std::pow(2.0, l)) *
             std::pow(t, 2 * m + 2 * l);
    }
  }
  return std::pow(t, k - j) * std::exp(-0.5 * t * t) /
         (std::tgamma(0.5 * k) * std::pow(2.0, 0.5 * (k - 2))) * sum;
}

double chi_tail(int k, double x) {
  if (x <= 0.0) return 1.0;
  return gsl_cdf_chisq_Q(x * x, static_cast<double>(k));
}

namespace {

// Shared Poisson-mixture driver: sums weight_i * term(k + 2i) with
// weight_i = e^{-alpha/2} (alpha/2)^i / i!, truncating when the remaining
// Poisson mass times a crude sup bound of 1.5 on the mixed terms falls
// below tol.
template <typename TermFn>
SeriesValue poisson_mixture(double alpha, double tol, TermFn term) {
  constexpr int kMaxTerms = 10000;
  const double half_alpha = 0.5 * alpha;
  double weight = std::exp(-half_alpha);
  double mass_used = 0.0;
  double sum = 0.0;
  for (int i = 0; i < kMaxTerms; ++i) {
    sum += weight * term(i);
    mass_used += weight;
    if ((1.0 - mass_used) * 1.5 < tol * 1e-2) return {sum, i + 1};
    weight *= half_alpha / (i + 1);
  }
  throw SeriesFailure("noncentral chi series did not converge in 10000 terms");
}

}  // namespace

SeriesValue noncentral_chi_density_full(int k, double alpha, double t,
                                        double tol) {
  if (k < 1) throw std::invalid_argument("noncentral_chi_density: k >= 1");
  if (alpha < 0.0)
    throw std::invalid_argument("noncentral_chi_density: alpha >= 0");
  if (t <= 0.0)
    throw std::domain_error("noncentral_chi_density: t must be positive");
  if (tol <= 0.0)
    throw std::invalid_argument("noncentral_chi_density: tol must be positive");
  return poisson_mixture(alpha, tol,
                         [&](int i) { return chi_density(k + 2 * i, t); });
}

double noncentral_chi_density(int k, double alpha, double t, double tol) {
  return noncentral_chi_density_full(k, alpha, t, tol).value;
}

double noncentral_chi_tail(int k, double alpha, double x, double tol) {
  if (x <= 0.0) return 1.0;
  return poisson_mixture(alpha, tol, [&](int i) {
           return gsl_cdf_chisq_Q(x * x, static_cast<double>(k + 2 * i));
         })
      .value;
}

double binomial(int n, int r) {
  if (r < 0 || r > n || n < 0) return 0.0;
  return gsl_sf_choose(static_cast<unsigned>(n), static_cast<unsigned>(r));
}

double factorial(int n) { return gsl_sf_fact(static_cast<unsigned>(n)); }

}  // namespace gkf
