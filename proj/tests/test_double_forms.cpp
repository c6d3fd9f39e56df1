#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "gkf/double_form.hpp"
#include "gkf/rng.hpp"
#include "gkf/special_fn.hpp"

using namespace gkf;

namespace {

DoubleForm random_form(int dim, int p, int q, std::uint64_t seed) {
  CounterRng rng(seed);
  DoubleForm a(dim);
  Eigen::MatrixXd& m = a.grade(p, q);
  int slot = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rng.normal(0, slot++);
  return a;
}

Eigen::VectorXd random_vec(int dim, std::uint64_t seed) {
  CounterRng rng(seed);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.normal(1, i);
  return v;
}

}  // namespace

TEST_CASE("double wedge: basis products and identity powers") {
  DoubleForm a = DoubleForm::basis(2, {0}, {0});
  DoubleForm b = DoubleForm::basis(2, {1}, {1});
  DoubleForm ab = double_wedge(a, b);
  CHECK(ab.coeff({0, 1}, {0, 1}) == doctest::Approx(1.0));

  // grade-(1,1) forms commute
  DoubleForm x = random_form(3, 1, 1, 11);
  DoubleForm y = random_form(3, 1, 1, 12);
  CHECK(double_wedge(x, y).max_abs_diff(double_wedge(y, x)) < 1e-14);

  DoubleForm i2 = wedge_power(DoubleForm::identity(2), 2);
  CHECK(i2.coeff({0, 1}, {0, 1}) == doctest::Approx(2.0));
}

TEST_CASE("trace: pinned values") {
  CHECK(trace_full(DoubleForm::basis(3, {0}, {0})) == doctest::Approx(1.0));
  for (int n : {2, 3, 4}) {
    CHECK(trace_full(DoubleForm::identity(n)) == doctest::Approx(n));
    CHECK(trace_full(wedge_power(DoubleForm::identity(n), 2)) ==
          doctest::Approx(n * (n - 1)));
  }
}

TEST_CASE("annihilation sign rules") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    int dim = 3 + static_cast<int>(s % 2);
    DoubleForm a = random_form(dim, 2, 2, 100 + s);
    Eigen::VectorXd v1 = random_vec(dim, 200 + s);
    Eigen::VectorXd v2 = random_vec(dim, 300 + s);
    DoubleForm lhs = eta(v1, eta(v2, a));
    DoubleForm rhs = eta(v2, eta(v1, a)) * -1.0;
    CHECK(lhs.max_abs_diff(rhs) < 1e-12);
    DoubleForm lhs2 = eta_prime(v1, eta(v2, a));
    DoubleForm rhs2 = eta(v2, eta_prime(v1, a));
    CHECK(lhs2.max_abs_diff(rhs2) < 1e-12);
  }
}

TEST_CASE("double wedge: associativity and bilinearity") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    int dim = 4;
    DoubleForm a = random_form(dim, 1, 1, 400 + s);
    DoubleForm b = random_form(dim, 1, 2, 500 + s);
    DoubleForm c = random_form(dim, 2, 1, 600 + s);
    DoubleForm lhs = double_wedge(double_wedge(a, b), c);
    DoubleForm rhs = double_wedge(a, double_wedge(b, c));
    CHECK(lhs.max_abs_diff(rhs) < 1e-12);
    DoubleForm lin = double_wedge(a + b * 2.0, c);
    DoubleForm lin2 = double_wedge(a, c) + double_wedge(b, c) * 2.0;
    CHECK(lin.max_abs_diff(lin2) < 1e-12);
  }
}

TEST_CASE("contraction equals k! times restricted trace") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    int dim = 4;
    int k = 1 + static_cast<int>(s % 3);
    DoubleForm a = random_form(dim, k, k, 700 + s);
    std::vector<Eigen::VectorXd> raw;
    for (int i = 0; i < k; ++i) raw.push_back(random_vec(dim, 800 + 7 * s + i));
    std::vector<Eigen::VectorXd> onb = gram_schmidt(raw);
    REQUIRE(static_cast<int>(onb.size()) == k);
    DoubleForm contracted = a;
    for (int i = 0; i < k; ++i) contracted = contract(onb, contracted);
    // C_L^k(alpha) is a scalar (grade (0,0) coefficient)
    double lhs = contracted.grade(0, 0)(0, 0);
    double rhs = factorial(k) * trace_full(restrict_to(a, onb));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("gaussian matrix-moment closed form: low moments") {
  Eigen::MatrixXd mu(2, 2);
  mu << 1.0, 0.3, -0.2, 0.7;
  Eigen::MatrixXd a = Eigen::MatrixXd::Random(4, 4);
  Eigen::MatrixXd sigma = a * a.transpose() / 4.0;
  GaussianDoubleFormModel model(mu, sigma);

  CHECK(gaussian_moment_rhs(model, 1).max_abs_diff(model.mean()) < 1e-14);
  DoubleForm m2 = wedge_power(model.mean(), 2) + model.cov();
  CHECK(gaussian_moment_rhs(model, 2).max_abs_diff(m2) < 1e-14);

  Eigen::MatrixXd mu3 = Eigen::MatrixXd::Identity(3, 3);
  Eigen::MatrixXd a3 = Eigen::MatrixXd::Random(9, 9);
  GaussianDoubleFormModel model3(mu3, a3 * a3.transpose() / 9.0);
  DoubleForm m3 = wedge_power(model3.mean(), 3) +
                  double_wedge(model3.mean(), model3.cov()) * 3.0;
  CHECK(gaussian_moment_rhs(model3, 3).max_abs_diff(m3) < 1e-13);
}

TEST_CASE("gaussian matrix-moment Monte Carlo agreement (quick)") {
  // W = I + noise with cov = I^2 in dim 2
  Eigen::MatrixXd mu = Eigen::MatrixXd::Identity(2, 2);
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(4, 4);
  // C = I^2 corresponds to coefficient covariance from Z*(e1 x e1 + e2 x e2)?
  // Use a simple diagonal coefficient covariance instead; the oracle is
  // gaussian_moment_rhs on the same model either way.
  sigma.diagonal() << 0.5, 0.25, 0.25, 0.5;
  GaussianDoubleFormModel model(mu, sigma);
  MomentEstimate est = gaussian_moment_mc(model, 2, 40000, 99);
  DoubleForm ref = gaussian_moment_rhs(model, 2);
  const Eigen::MatrixXd& m = est.mean.grade(2, 2);
  const Eigen::MatrixXd& se = est.std_error.grade(2, 2);
  const Eigen::MatrixXd& r = ref.grade(2, 2);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      CHECK(std::abs(m(i, j) - r(i, j)) <= 4.0 * se(i, j) + 1e-12);
}

TEST_CASE("model validation: non-PSD covariance rejected") {
  Eigen::MatrixXd mu = Eigen::MatrixXd::Identity(2, 2);
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(4, 4);
  sigma(0, 0) = -1.0;
  CHECK_THROWS_AS(GaussianDoubleFormModel(mu, sigma), std::invalid_argument);
}

TEST_CASE("conditional moment identity: pinned right-hand sides") {
  Eigen::VectorXd e1 = Eigen::VectorXd::Unit(2, 0);
  Eigen::VectorXd c1(1);
  c1 << 1.7;
  ConditionalCheck a =
      conditional_moment_check(DoubleForm::basis(2, {0}, {0}), e1, c1, 1000, 3);
  CHECK(a.rhs_value == doctest::Approx(1.7 * 1.7));
  ConditionalCheck b =
      conditional_moment_check(DoubleForm::basis(2, {1}, {1}), e1, c1, 1000, 3);
  CHECK(b.rhs_value == doctest::Approx(1.0));

  Eigen::VectorXd e1_3 = Eigen::VectorXd::Unit(3, 0);
  Eigen::VectorXd c2 = Eigen::VectorXd::Zero(2);
  ConditionalCheck d = conditional_moment_check(wedge_power(DoubleForm::identity(3), 2),
                                   e1_3, c2, 1000, 3);
  CHECK(d.rhs_value == doctest::Approx(4.0));

  Eigen::VectorXd bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(conditional_moment_check(DoubleForm::basis(2, {0}, {0}), bad, c1, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("conditional moment identity: Monte Carlo agreement (quick)") {
  for (std::uint64_t s = 0; s < 4; ++s) {
    DoubleForm alpha = random_form(3, 2, 2, 900 + s);
    Eigen::VectorXd v0 = random_vec(3, 950 + s).normalized();
    Eigen::VectorXd c = random_vec(2, 970 + s);
    ConditionalCheck chk = conditional_moment_check(alpha, v0, c, 60000, 42 + s);
    CHECK(std::abs(chk.mc_value - chk.rhs_value) <=
          4.0 * chk.std_error + 1e-12);
  }
}
