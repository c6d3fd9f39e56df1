#include <doctest.h>

#include <cmath>

#include "gkf/quadrature.hpp"
#include "gkf/special_fn.hpp"

using namespace gkf;

namespace {

// Explicit Hermite polynomial from the closed-form sum, used as an
// independent oracle for the recurrence implementation.
double hermite_explicit(int n, double x) {
  double sum = 0.0;
  for (int m = 0; 2 * m <= n; ++m) {
    double sign = m % 2 ? -1.0 : 1.0;
    sum += sign * std::pow(x, n - 2 * m) /
           (factorial(m) * factorial(n - 2 * m) * std::pow(2.0, m));
  }
  return factorial(n) * sum;
}

// n-th derivative of e^{-x^2/2} by Richardson-extrapolated central
// differences. Step sizes grow with n to keep roundoff under control.
double gauss_exp_derivative_fd(int n, double x) {
  auto f = [](double t) { return std::exp(-0.5 * t * t); };
  auto diff = [&](double h) {
    // central difference of order n: sum_i (-1)^i C(n,i) f(x + (n/2 - i) h)
    double s = 0.0;
    for (int i = 0; i <= n; ++i) {
      double sign = i % 2 ? -1.0 : 1.0;
      s += sign * binomial(n, i) * f(x + (0.5 * n - i) * h);
    }
    return s / std::pow(h, n);
  };
  double h = n <= 3 ? 1e-2 : 0.05;
  double d1 = diff(h), d2 = diff(h / 2), d3 = diff(h / 4);
  // two Richardson levels: kills the O(h^2) and O(h^4) terms
  double r1 = (4.0 * d2 - d1) / 3.0, r2 = (4.0 * d3 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace

TEST_CASE("hermite: pinned values") {
  CHECK(hermite(0, 3.7) == doctest::Approx(1.0));
  CHECK(hermite(2, 0.0) == doctest::Approx(-1.0));
  CHECK(hermite(3, 2.0) == doctest::Approx(2.0));
  // H_{2l}(0) = (-1)^l (2l)! / (l! 2^l)
  for (int l = 0; l <= 4; ++l) {
    double expected = (l % 2 ? -1.0 : 1.0) * factorial(2 * l) /
                      (factorial(l) * std::pow(2.0, l));
    CHECK(hermite(2 * l, 0.0) == doctest::Approx(expected));
    CHECK(hermite(2 * l + 1, 0.0) == doctest::Approx(0.0));
  }
}

TEST_CASE("hermite: derivative identity and explicit-sum oracle") {
  for (int n = 0; n <= 8; ++n) {
    for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      CHECK(hermite(n, x) == doctest::Approx(hermite_explicit(n, x))
                                 .epsilon(1e-12));
      if (n <= 4) {
        double sign = n % 2 ? -1.0 : 1.0;
        double lhs = gauss_exp_derivative_fd(n, x);
        double rhs = sign * hermite(n, x) * std::exp(-0.5 * x * x);
        CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST_CASE("unit ball volume: values and recursion") {
  CHECK(unit_ball_volume(0) == doctest::Approx(1.0));
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
  CHECK(unit_ball_volume(2) == doctest::Approx(M_PI));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0));
  for (int k = 1; k <= 20; ++k) {
    double rhs = unit_ball_volume(k - 1) * std::sqrt(M_PI) *
                 std::tgamma(0.5 * (k + 1)) / std::tgamma(0.5 * k + 1.0);
    CHECK(unit_ball_volume(k) == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("flag coefficients: values and symmetry") {
  CHECK(flag_coeff(5, 0) == doctest::Approx(1.0));
  CHECK(flag_coeff(2, 1) == doctest::Approx(M_PI / 2.0));
  CHECK(flag_coeff(3, 1) == doctest::Approx(2.0));
  for (int k = 0; k <= 10; ++k)
    for (int i = 0; i <= k; ++i)
      CHECK(flag_coeff(k, i) == doctest::Approx(flag_coeff(k, k - i))
                                    .epsilon(1e-14));
  CHECK_THROWS_AS(flag_coeff(2, 3), std::invalid_argument);
}

TEST_CASE("incomplete beta: pinned values") {
  CHECK(incomplete_beta(1, 1, 0.75) == doctest::Approx(0.75));
  CHECK(incomplete_beta(0.5, 0.5, 1.0) == doctest::Approx(M_PI));
  CHECK(incomplete_beta(2, 1, 0.5) == doctest::Approx(0.125));
  CHECK_THROWS_AS(incomplete_beta(1, 1, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(incomplete_beta(-1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("chi density derivative: closed forms") {
  for (double t : {0.3, 1.0, 2.2}) {
    CHECK(chi_density_derivative(2, 1, t) ==
          doctest::Approx(t * std::exp(-0.5 * t * t)).epsilon(1e-12));
    CHECK(chi_density_derivative(2, 2, t) ==
          doctest::Approx((1.0 - t * t) * std::exp(-0.5 * t * t))
              .epsilon(1e-12));
  }
  CHECK(chi_density_derivative(3, 1, 1.0) ==
        doctest::Approx(std::sqrt(2.0 / M_PI) * std::exp(-0.5)));
  CHECK_THROWS_AS(chi_density_derivative(2, 1, -1.0), std::domain_error);
}

TEST_CASE("chi density derivative: chain property") {
  const double h = 1e-5;
  for (int k = 1; k <= 6; ++k) {
    for (int j = 1; j <= 5; ++j) {
      for (int i = 1; i <= 20; ++i) {
        double t = 0.2 + 0.15 * i;
        double fd = (chi_density_derivative(k, j, t + h) -
                     chi_density_derivative(k, j, t - h)) /
                    (2.0 * h);
        CHECK(chi_density_derivative(k, j + 1, t) ==
              doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("densities integrate to one") {
  for (int k : {1, 2, 3, 5}) {
    double total = integrate([k](double t) { return chi_density(k, t); },
                             1e-12, 20.0);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  }
  for (double alpha : {0.5, 1.0, 4.0}) {
    double total = integrate(
        [alpha](double t) { return noncentral_chi_density(2, alpha, t); },
        1e-12, 20.0 + 5.0 * std::sqrt(alpha));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("noncentral chi: limits and failure modes") {
  for (double t : {0.5, 1.0, 2.0})
    CHECK(noncentral_chi_density(3, 0.0, t) ==
          doctest::Approx(chi_density(3, t)).epsilon(1e-12));
  // truncation index is recorded and grows with the noncentrality
  SeriesValue a = noncentral_chi_density_full(2, 1.0, 1.0, 1e-12);
  SeriesValue b = noncentral_chi_density_full(2, 16.0, 1.0, 1e-12);
  CHECK(a.terms > 0);
  CHECK(b.terms > a.terms);
  CHECK_THROWS_AS(noncentral_chi_density(2, 1e5, 1.0, 1e-12), SeriesFailure);
  // tail is consistent with the density
  double tail = noncentral_chi_tail(2, 1.0, 1.5);
  double quad = integrate(
      [](double t) { return noncentral_chi_density(2, 1.0, t); }, 1.5, 25.0);
  CHECK(tail == doctest::Approx(quad).epsilon(1e-8));
}
