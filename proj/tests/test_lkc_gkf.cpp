#include <doctest.h>

#include <cmath>

#include "gkf/gkf.hpp"
#include "gkf/special_fn.hpp"

using namespace gkf;

TEST_CASE("curvature vectors of standard parameter spaces") {
  LkcVector sq = lkc_box({1.0, 1.0}, 1.0);
  CHECK(sq.dim() == 2);
  CHECK(sq[0] == doctest::Approx(1.0));
  CHECK(sq[1] == doctest::Approx(2.0));
  CHECK(sq[2] == doctest::Approx(1.0));

  LkcVector cube = lkc_box({1.0, 1.0, 1.0}, 1.0);
  CHECK(cube[0] == doctest::Approx(1.0));
  CHECK(cube[1] == doctest::Approx(3.0));
  CHECK(cube[2] == doctest::Approx(3.0));
  CHECK(cube[3] == doctest::Approx(1.0));

  // metric scaling: L_j picks up mu2^{j/2}
  double mu2 = 0.37;
  LkcVector s = lkc_box({2.0, 3.0}, mu2);
  CHECK(s[0] == doctest::Approx(1.0));
  CHECK(s[1] == doctest::Approx(5.0 * std::sqrt(mu2)));
  CHECK(s[2] == doctest::Approx(6.0 * mu2));

  LkcVector iv = lkc_interval(4.0, 0.25);
  CHECK(iv[0] == doctest::Approx(1.0));
  CHECK(iv[1] == doctest::Approx(2.0));

  LkcVector torus = lkc_flat_torus2(5.0, 0.5);
  CHECK(torus[0] == doctest::Approx(0.0));
  CHECK(torus[1] == doctest::Approx(0.0));
  CHECK(torus[2] == doctest::Approx(12.5));

  LkcVector sph = lkc_sphere2(2.0, 1.0);
  CHECK(sph[0] == doctest::Approx(2.0));  // Euler characteristic
  CHECK(sph[1] == doctest::Approx(0.0));  // no boundary
  CHECK(sph[2] == doctest::Approx(4.0 * M_PI * 4.0));
}

TEST_CASE("Steiner polynomial matches the curvature vector") {
  std::vector<double> sides = {1.5, 0.7, 2.0};
  LkcVector l = lkc_box(sides, 1.0);
  std::vector<double> omega = {1.0, 2.0, M_PI, 4.0 * M_PI / 3.0};
  for (double r : {0.1, 0.5, 1.0}) {
    double poly = 0.0;
    for (int j = 0; j <= 3; ++j)
      poly += omega[static_cast<std::size_t>(3 - j)] *
              std::pow(r, 3 - j) * l[j];
    CHECK(steiner_tube_volume_box(sides, r) ==
          doctest::Approx(poly).epsilon(1e-12));
  }
  std::vector<double> mink = minkowski_from_lkc(l, 3);
  // M_{3-j} = (3-j)! omega_{3-j} L_j
  CHECK(mink[0] == doctest::Approx(l[3]));
  CHECK(mink[3] == doctest::Approx(6.0 * omega[3] * l[0]));
}

TEST_CASE("expected Euler characteristic: unit square, Gaussian field") {
  double u = 2.0;
  LkcVector sq = lkc_box({1.0, 1.0}, 1.0);
  GkfResult r = expected_euler_char(sq, "gaussian", u);
  double expect = (1.0 - gauss_cdf(u)) +
                  2.0 * gauss_pdf(u) / std::sqrt(2.0 * M_PI) +
                  gauss_pdf(u) * hermite(1, u) / (2.0 * M_PI);
  CHECK(r.expected_chi == doctest::Approx(expect).epsilon(1e-13));
  CHECK(r.expected_chi == doctest::Approx(0.08301).epsilon(1e-3));
  CHECK(r.terms.size() == 3);
  CHECK(r.truncation_order == 2);
}

TEST_CASE("expected Euler characteristic: flat torus has pure top term") {
  double period = 5.0, mu2 = 0.5, u = 1.0;
  LkcVector t = lkc_flat_torus2(period, mu2);
  GkfResult r = expected_euler_char(t, "gaussian", u);
  double expect =
      mu2 * period * period * gauss_pdf(u) * hermite(1, u) / (2.0 * M_PI);
  CHECK(r.expected_chi == doctest::Approx(expect).epsilon(1e-13));
  CHECK(r.terms[0] == 0.0);
  CHECK(r.terms[1] == 0.0);
}

TEST_CASE("series order must cover the parameter-space dimension") {
  LkcVector cube = lkc_box({1.0, 1.0, 1.0}, 1.0);
  GmfSeries short_series = gmf_half_space(1.0, 2);
  CHECK_THROWS_AS(expected_euler_char(cube, short_series),
                  std::invalid_argument);
}

TEST_CASE("EC densities: pinned values and reparameterization") {
  double u = 1.3;
  CHECK(ec_density("gaussian", 0, u) == doctest::Approx(1.0 - gauss_cdf(u)));
  for (int j = 1; j <= 4; ++j)
    CHECK(ec_density("gaussian", j, u) ==
          doctest::Approx(std::pow(2.0 * M_PI, -0.5 * (j + 1)) *
                          hermite(j - 1, u) * std::exp(-0.5 * u * u))
              .epsilon(1e-13));

  // chi2 with 2 dof at u = 4: M_1 = x e^{-x^2/2} at x = 2
  CHECK(ec_density("chi2", 1, 4.0, {2.0}) ==
        doctest::Approx(2.0 * std::exp(-2.0) / std::sqrt(2.0 * M_PI))
            .epsilon(1e-13));

  // chi is the same family on the sqrt scale
  for (int j = 0; j <= 3; ++j)
    CHECK(ec_density("chi2", j, 4.0, {3.0}) ==
          doctest::Approx(ec_density("chi", j, 2.0, {3.0})).epsilon(1e-13));

  std::vector<double> rho = ec_densities("f", 1.5, 3, {3.0, 8.0});
  GmfSeries f = gmf_f_field(3, 8, 1.5, 3);
  for (int j = 0; j <= 3; ++j)
    CHECK(rho[static_cast<std::size_t>(j)] ==
          doctest::Approx(std::pow(2.0 * M_PI, -0.5 * j) * f[j]));

  CHECK_THROWS_AS(ec_density("weibull", 0, 1.0), std::invalid_argument);
}

TEST_CASE("kinematic sum is linear in the curvature vector") {
  GmfSeries s = gmf_half_space(0.7, 2);
  LkcVector a{{1.0, 2.0, 1.0}};
  LkcVector b{{0.0, 1.0, 3.0}};
  LkcVector sum{{1.0, 3.0, 4.0}};
  double lhs = expected_euler_char(sum, s).expected_chi;
  double rhs = expected_euler_char(a, s).expected_chi +
               expected_euler_char(b, s).expected_chi;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
}

TEST_CASE("supremum tail approximation clamps to probabilities") {
  LkcVector big = lkc_box({100.0, 100.0}, 1.0);
  TailApprox low = sup_tail_approx(big, "gaussian", 0.0);
  CHECK(low.clamped);
  CHECK(low.value == 1.0);

  LkcVector pt{{1.0}};
  TailApprox p = sup_tail_approx(pt, "gaussian", 1.0);
  CHECK(!p.clamped);
  CHECK(p.value == doctest::Approx(1.0 - gauss_cdf(1.0)));

  LkcVector sq = lkc_box({1.0, 1.0}, 1.0);
  TailApprox t = sup_tail_approx(sq, "gaussian", 3.5);
  CHECK(!t.clamped);
  CHECK(t.value == doctest::Approx(
                       expected_euler_char(sq, "gaussian", 3.5).expected_chi));
}
