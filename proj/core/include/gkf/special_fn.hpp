#pragma once

#include <stdexcept>

namespace gkf {

struct SeriesFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hermite polynomial H_n(x), probabilists' convention:
//   d^n/dx^n e^{-x^2/2} = (-1)^n H_n(x) e^{-x^2/2},
// three-term recurrence H_{n+1} = x H_n - n H_{n-1}, H_0 = 1, H_1 = x.
// NOTE: this differs from the physicists' convention by a 2^{n/2} rescale.
double hermite(int n, double x);

// Standard normal density and CDF.
double gauss_pdf(double x);
double gauss_cdf(double x);

// Volume of the unit ball in R^k: omega_k = pi^{k/2} / Gamma(k/2 + 1).
double unit_ball_volume(int k);

// Flag coefficient [k i] = C(k,i) * omega_k / (omega_i * omega_{k-i}).
double flag_coeff(int k, int i);

// Unnormalized incomplete beta IB_{nu1,nu2}(x) = int_0^x t^{nu1-1}(1-t)^{nu2-1} dt.
// At x = 1 this is the complete beta function B(nu1, nu2).
double incomplete_beta(double nu1, double nu2, double x);
double beta_fn(double nu1, double nu2);

// Density of the square root of a chi^2_k variable:
//   f_k(x) = x^{k-1} e^{-x^2/2} / (Gamma(k/2) 2^{(k-2)/2}).
double chi_density(int k, double t);

// (j-1)-th derivative of f_k at t > 0, closed form (double sum over l, m
// with coefficient (-1)^{m+l} (j-1)! / (m! l! 2^l)).
double chi_density_derivative(int k, int j, double t);

// Upper tail P(chi_k >= x) of the chi (not chi^2) distribution.
double chi_tail(int k, double x);

struct SeriesValue {
  double value = 0.0;
  int terms = 0;  // truncation index actually used
};

// Density f_{alpha,k} of the square root of a noncentral chi^2_k variable,
// alpha = |mu|^2. Poisson-mixture series truncated when the remaining
// Poisson mass (with a crude sup-density bound of 1.5) drops below tol.
SeriesValue noncentral_chi_density_full(int k, double alpha, double t, double tol);
double noncentral_chi_density(int k, double alpha, double t, double tol = 1e-12);

// Upper tail P(|Z + mu| >= x), same series/truncation rule.
double noncentral_chi_tail(int k, double alpha, double x, double tol = 1e-12);

// Falling-factorial-free helpers shared across modules.
double binomial(int n, int r);      // 0 for r < 0 or r > n
double factorial(int n);

}  // namespace gkf
