#include <doctest.h>

#include <cmath>

#include "gkf/gmf.hpp"
#include "gkf/special_fn.hpp"

using namespace gkf;

TEST_CASE("half-space series: closed form and level-shift consistency") {
  for (double u : {-1.0, 0.0, 1.0, 2.5}) {
    GmfSeries s = gmf_half_space(u, 5);
    CHECK(s[0] == doctest::Approx(1.0 - gauss_cdf(u)).epsilon(1e-14));
    for (int j = 1; j <= 5; ++j)
      CHECK(s[j] == doctest::Approx(gauss_pdf(u) * hermite(j - 1, u))
                        .epsilon(1e-13));
    // tube of a half-space is a half-space: M_{j+1}(u) = -d M_j / du
    const double h = 1e-6;
    for (int j = 0; j <= 4; ++j) {
      double fd = -(gmf_half_space(u + h, 5)[j] - gmf_half_space(u - h, 5)[j]) /
                  (2.0 * h);
      CHECK(s[j + 1] == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("chi series: pinned values for k = 2") {
  // f_2 is the Rayleigh density: M_1 = x e^{-x^2/2}, M_2 = (x^2-1) e^{-x^2/2}
  for (double x : {1.0, 2.0}) {
    GmfSeries s = gmf_chi(2, x, 2);
    double e = std::exp(-0.5 * x * x);
    CHECK(s[0] == doctest::Approx(e).epsilon(1e-13));
    CHECK(s[1] == doctest::Approx(x * e).epsilon(1e-13));
    CHECK(s[2] == doctest::Approx((x * x - 1.0) * e).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gmf_chi(2, -1.0, 2), std::invalid_argument);
}

TEST_CASE("noncentral chi series: central limit and tail derivative") {
  GmfSeries central = gmf_chi(3, 1.5, 3);
  GmfSeries nc = gmf_noncentral_chi(3, 0.0, 1.5, 3);
  for (int j = 0; j <= 3; ++j)
    CHECK(nc[j] == doctest::Approx(central[j]).epsilon(1e-12));

  // M_1 is the density of |Z + mu|: minus the derivative of the tail
  const double h = 1e-5;
  GmfSeries s = gmf_noncentral_chi(2, 1.0, 2.0, 2);
  double fd = -(noncentral_chi_tail(2, 1.0, 2.0 + h) -
                noncentral_chi_tail(2, 1.0, 2.0 - h)) /
              (2.0 * h);
  CHECK(s[1] == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("F-region series: two independent closed-form routes agree") {
  for (int k1 : {2, 3, 5}) {
    for (int k2 : {2, 4}) {
      for (double u : {0.5, 1.0, 2.0}) {
        GmfSeries s = gmf_f_field(k1, k2, u, 3);
        for (int j = 1; j <= 3; ++j) {
          double other = gmf_f_field_via_surface(k1, k2, u, j);
          CHECK(s[j] == doctest::Approx(other).epsilon(1e-10));
        }
      }
    }
  }
  // Gamma pole: (k1 + k2 - j)/2 hits a nonpositive integer
  CHECK_THROWS_AS(gmf_f_field(1, 1, 1.0, 2), std::domain_error);
}

TEST_CASE("sector integrals K_{j,l}: elementary cases") {
  for (double theta : {0.4, M_PI / 2, 2.4}) {
    CHECK(K_jl(2, 0, theta) == doctest::Approx(M_PI - theta).epsilon(1e-12));
    CHECK(K_jl(3, 0, theta) ==
          doctest::Approx(2.0 * (1.0 + std::cos(theta))).epsilon(1e-10));
    CHECK(K_jl(3, 1, theta) ==
          doctest::Approx(2.0 * std::sin(theta)).epsilon(1e-10));
  }
  KjlDiagnostic d = K_jl_diagnostic(3, 0, 1.0);
  CHECK(d.quadrature == doctest::Approx(2.0 * (1.0 + std::cos(1.0))));
  CHECK_THROWS_AS(K_jl(1, 0, 1.0), std::invalid_argument);
}

TEST_CASE("cone series: quadrant at the origin") {
  Cone2 q;
  q.v1 = Eigen::Vector2d(0.0, 1.0);
  q.v2 = Eigen::Vector2d(1.0, 0.0);
  q.apex = Eigen::Vector2d::Zero();
  GmfSeries s = gmf_cone2(q, 2);
  CHECK(s[0] == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(s[1] == doctest::Approx(2.0 * 0.5 / std::sqrt(2.0 * M_PI))
                    .epsilon(1e-12));
  CHECK(s[2] == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("cone series: degenerate and narrow cones") {
  Cone2 bad;
  bad.v1 = Eigen::Vector2d(0.0, 1.0);
  bad.v2 = Eigen::Vector2d(0.0, -1.0);
  bad.apex = Eigen::Vector2d::Zero();
  CHECK_THROWS_AS(gmf_cone2(bad, 1), std::invalid_argument);

  // As v2 -> v1 the cone collapses to a ray and its Gaussian mass vanishes.
  double prev = 1.0;
  for (double eps : {0.3, 0.03, 0.003}) {
    Cone2 c;
    c.v1 = Eigen::Vector2d(0.0, 1.0);
    c.v2 = Eigen::Vector2d(std::sin(eps), std::cos(eps));
    c.apex = Eigen::Vector2d(0.4, -0.2);
    double m0 = gmf_cone2(c, 0)[0];
    CHECK(m0 < prev);
    prev = m0;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("conjunction cone parameters") {
  for (double rho : {-0.5, 0.0, 0.5}) {
    Cone2 c = conjunction_cone_params(1.0, rho);
    double root = std::sqrt(1.0 - rho * rho);
    CHECK(c.v1.isApprox(Eigen::Vector2d(0.0, 1.0)));
    CHECK(c.v2.isApprox(Eigen::Vector2d(root, -rho)));
    CHECK(c.apex.x() == doctest::Approx(1.0));
    CHECK(c.apex.y() == doctest::Approx((1.0 - rho) / root));
    // interior angle is pi/2 + asin(rho)... via <v1,v2> = -rho
    CHECK(cone_angle(c) == doctest::Approx(std::acos(-rho)));
  }
  // the two apex conventions coincide exactly at rho = 0
  Cone2 a = conjunction_cone_params(1.3, 0.0);
  Cone2 b = conjunction_cone_alt_apex(1.3, 0.0);
  CHECK((a.apex - b.apex).norm() < 1e-14);
  // and differ otherwise (recorded diagnostic, not an error)
  Cone2 a2 = conjunction_cone_params(1.3, 0.5);
  Cone2 b2 = conjunction_cone_alt_apex(1.3, 0.5);
  CHECK((a2.apex - b2.apex).norm() > 1e-3);
}

TEST_CASE("conjunction independent check at rho = 0") {
  // For independent fields, P(min(z1,z2) >= u) = (1 - Phi(u))^2 = gamma(cone).
  for (double u : {0.5, 1.0, 2.0}) {
    Cone2 c = conjunction_cone_params(u, 0.0);
    double m0 = gmf_cone2(c, 0)[0];
    double tail = 1.0 - gauss_cdf(u);
    CHECK(m0 == doctest::Approx(tail * tail).epsilon(1e-8));
  }
}

TEST_CASE("generic boundary series: specializations match closed forms") {
  // half-space in R^1: boundary is the single point u with unit weight
  {
    double u = 1.0;
    BoundaryData bd;
    bd.k = 1;
    BoundaryNode nd;
    nd.position = Eigen::VectorXd::Constant(1, u);
    nd.normal = Eigen::VectorXd::Constant(1, -1.0);
    nd.weights = {1.0};
    bd.nodes.push_back(nd);
    GmfSeries s = gmf_boundary_integral(bd, 3, 1.0 - gauss_cdf(u));
    GmfSeries ref = gmf_half_space(u, 3);
    for (int j = 0; j <= 3; ++j)
      CHECK(s[j] == doctest::Approx(ref[j]).epsilon(1e-12));
  }
  // ball complement in R^2: circle with curvature weight -1/x at order 2
  {
    double x = 2.0;
    int N = 4000;
    BoundaryData bd;
    bd.k = 2;
    for (int i = 0; i < N; ++i) {
      double t = 2.0 * M_PI * (i + 0.5) / N;
      BoundaryNode nd;
      nd.position = Eigen::Vector2d(x * std::cos(t), x * std::sin(t));
      nd.normal = -nd.position / x;
      double darc = 2.0 * M_PI * x / N;
      nd.weights = {darc, -darc / x};
      bd.nodes.push_back(nd);
    }
    GmfSeries s = gmf_boundary_integral(bd, 2);
    GmfSeries ref = gmf_chi(2, x, 2);
    CHECK(s[1] == doctest::Approx(ref[1]).epsilon(1e-7));
    CHECK(s[2] == doctest::Approx(ref[2]).epsilon(1e-7));
  }
  // missing weight orders are rejected
  {
    BoundaryData bd;
    bd.k = 2;
    BoundaryNode nd;
    nd.position = Eigen::Vector2d(1.0, 0.0);
    nd.normal = Eigen::Vector2d(1.0, 0.0);
    nd.weights = {1.0};
    bd.nodes.push_back(nd);
    CHECK_THROWS_AS(gmf_boundary_integral(bd, 2), std::invalid_argument);
  }
}

TEST_CASE("coarea estimators: chi domain cross-check") {
  ImplicitDomain d;
  d.level = 2.0;
  d.map.k = 2;
  d.map.value = [](const Eigen::VectorXd& x) { return x.norm(); };
  d.map.gradient = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(x / x.norm());
  };
  d.map.hessian = [](const Eigen::VectorXd& x) {
    double r = x.norm();
    Eigen::VectorXd h = x / r;
    return Eigen::MatrixXd(
        (Eigen::MatrixXd::Identity(2, 2) - h * h.transpose()) / r);
  };
  CoareaM1M2 est = gmf_m1_m2_coarea(d, 0.02, 1000000, 5);
  GmfSeries ref = gmf_chi(2, 2.0, 2);
  CHECK(std::abs(est.m1 - ref[1]) <= 4.0 * est.m1_se + 1e-4);
  CHECK(std::abs(est.m2 - ref[2]) <= 4.0 * est.m2_se + 1e-3);
  CHECK_THROWS_AS(gmf_m1_m2_coarea(d, 1e-12, 1000, 1), std::runtime_error);
}

TEST_CASE("series dispatch over the domain catalog") {
  Eigen::VectorXd z = Eigen::VectorXd::Unit(3, 0);
  GmfSeries hs = gmf_series(HalfSpace{z, 1.0}, 2);
  CHECK(hs[1] == doctest::Approx(gauss_pdf(1.0)));

  GmfSeries chi = gmf_series(BallComplement{2, 2.0}, 2);
  CHECK(chi[0] == doctest::Approx(std::exp(-2.0)));

  Eigen::VectorXd mu = Eigen::VectorXd::Unit(2, 0);
  GmfSeries nc = gmf_series(NoncentralBallComplement{2, mu, 2.0}, 1);
  CHECK(nc[0] == doctest::Approx(noncentral_chi_tail(2, 1.0, 2.0)));

  Eigen::VectorXd bad_dir(2);
  bad_dir << 1.0, 1.0;
  CHECK_THROWS_AS(gmf_series(HalfSpace{bad_dir, 1.0}, 1),
                  std::invalid_argument);

  ImplicitDomain impl;
  impl.map.k = 2;
  CHECK_THROWS_AS(gmf_series(Domain{impl}, 1), std::invalid_argument);
}
