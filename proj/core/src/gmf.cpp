#include "gkf/gmf.hpp"

#include <gsl/gsl_sf_erf.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <stdexcept>

#include "gkf/parallel.hpp"
#include "gkf/quadrature.hpp"
#include "gkf/rng.hpp"
#include "gkf/special_fn.hpp"

namespace gkf {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSqrt2Pi = 2.506628274631000502415765284811;
}  // namespace

void validate_unit(const Eigen::VectorXd& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(what) + ": unit vector required");
}

int ambient_dim(const Domain& d) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HalfSpace>)
          return static_cast<int>(v.direction.size());
        else if constexpr (std::is_same_v<T, BallComplement>)
          return v.k;
        else if constexpr (std::is_same_v<T, NoncentralBallComplement>)
          return v.k;
        else if constexpr (std::is_same_v<T, FRegion>)
          return v.k1 + v.k2;
        else if constexpr (std::is_same_v<T, Cone2>)
          return 2;
        else
          return v.map.k;
      },
      d);
}

double cone_angle(const Cone2& c) {
  double dot = std::clamp(c.v1.dot(c.v2), -1.0, 1.0);
  return std::acos(dot);
}

namespace {

void validate_cone(const Cone2& c) {
  validate_unit(c.v1, "Cone2.v1");
  validate_unit(c.v2, "Cone2.v2");
  double cross = c.v1.x() * c.v2.y() - c.v1.y() * c.v2.x();
  if (std::abs(cross) < 1e-12)
    throw std::invalid_argument("Cone2: degenerate cone (v1, v2 collinear)");
}

Eigen::Vector2d perp_toward(const Eigen::Vector2d& v,
                            const Eigen::Vector2d& other) {
  Eigen::Vector2d p(-v.y(), v.x());
  if (p.dot(other) < 0.0) p = -p;
  return p;
}

}  // namespace

Eigen::Vector2d cone_v1_perp(const Cone2& c) { return perp_toward(c.v1, c.v2); }
Eigen::Vector2d cone_v2_perp(const Cone2& c) { return perp_toward(c.v2, c.v1); }

GmfSeries gmf_half_space(double u, int J) {
  if (J < 0) throw std::invalid_argument("gmf_half_space: J must be >= 0");
  GmfSeries s;
  s.m.resize(J + 1);
  s.m[0] = 1.0 - gauss_cdf(u);
  for (int j = 1; j <= J; ++j) s.m[j] = gauss_pdf(u) * hermite(j - 1, u);
  return s;
}

GmfSeries gmf_chi(int k, double x, int J) {
  if (k < 1 || x <= 0.0 || J < 0)
    throw std::invalid_argument("gmf_chi: requires k >= 1, x > 0, J >= 0");
  GmfSeries s;
  s.m.resize(J + 1);
  s.m[0] = chi_tail(k, x);
  // gamma(T(D_x, r)) = gamma(D_{x-r}), so M_j = (-1)^{j-1} f_k^{(j-1)}(x).
  for (int j = 1; j <= J; ++j) {
    double sign = (j % 2 == 1) ? 1.0 : -1.0;
    s.m[j] = sign * chi_density_derivative(k, j, x);
  }
  return s;
}

GmfSeries gmf_noncentral_chi(int k, double alpha, double x, int J, double tol) {
  if (k < 1 || x <= 0.0 || J < 0 || alpha < 0.0 || tol <= 0.0)
    throw std::invalid_argument("gmf_noncentral_chi: bad arguments");
  constexpr int kMaxTerms = 10000;
  const double half_alpha = 0.5 * alpha;
  GmfSeries s;
  s.m.assign(J + 1, 0.0);
  double weight = std::exp(-half_alpha);
  double mass_used = 0.0;
  for (int i = 0; i < kMaxTerms; ++i) {
    GmfSeries central = gmf_chi(k + 2 * i, x, J);
    for (int j = 0; j <= J; ++j) s.m[j] += weight * central.m[j];
    mass_used += weight;
    if ((1.0 - mass_used) * 1.5 < tol * 1e-2) return s;
    weight *= half_alpha / (i + 1);
  }
  throw SeriesFailure("gmf_noncentral_chi: series did not converge");
}

namespace {

// Checks the Gamma((k1+k2-j)/2) pole condition shared by both F-field routes.
void check_f_order(int k1, int k2, int j, const char* who) {
  double arg = 0.5 * (k1 + k2 - j);
  if (arg <= 0.0 && std::abs(arg - std::round(arg)) < 1e-12)
    throw std::domain_error(std::string(who) +
                            ": order out of range (Gamma pole)");
}

}  // namespace

double f_field_surface_integral(int k1, int k2, double u, int m) {
  if (k1 < 1 || k2 < 1 || u <= 0.0 || m < 0)
    throw std::invalid_argument("f_field_surface_integral: bad arguments");
  check_f_order(k1, k2, m + 1, "f_field_surface_integral");
  const double a = static_cast<double>(k1) * u / k2;
  double sum = 0.0;
  for (int i = 0; i <= m; ++i) {
    double sign = ((m - i) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::pow(a, i) * binomial(k1 - 1, m - i) * binomial(k2 - 1, i);
  }
  return std::tgamma(0.5 * (k1 + k2 - m - 1)) /
         (std::pow(2.0, 0.5 * (m - 1)) * std::tgamma(0.5 * k1) *
          std::tgamma(0.5 * k2)) *
         std::pow(a, 0.5 * (k1 - 1 - m)) *
         std::pow(1.0 + a, -0.5 * (k1 + k2 - 2)) * sum;
}

double gmf_f_field_via_surface(int k1, int k2, double u, int j) {
  if (j < 1) throw std::invalid_argument("gmf_f_field_via_surface: j >= 1");
  double sum = 0.0;
  for (int l = 0; 2 * l <= j - 1; ++l) {
    double sign = (l % 2 == 0) ? 1.0 : -1.0;
    sum += sign / (factorial(l) * std::pow(2.0, l)) *
           f_field_surface_integral(k1, k2, u, j - 2 * l - 1);
  }
  return factorial(j - 1) * sum;
}

GmfSeries gmf_f_field(int k1, int k2, double u, int J) {
  if (k1 < 1 || k2 < 1 || u <= 0.0 || J < 0)
    throw std::invalid_argument("gmf_f_field: bad arguments");
  const double a = static_cast<double>(k1) * u / k2;
  GmfSeries s;
  s.m.resize(J + 1);
  // Upper F tail via the regularized incomplete beta at k1 u / (k1 u + k2).
  s.m[0] = 1.0 - gsl_sf_beta_inc(0.5 * k1, 0.5 * k2, a / (1.0 + a));
  for (int j = 1; j <= J; ++j) {
    check_f_order(k1, k2, j, "gmf_f_field");
    const double half_kj = 0.5 * (k1 + k2 - j);
    double inner = 0.0;
    for (int l = 0; 2 * l <= j - 1; ++l) {
      double gamma_ratio = std::tgamma(half_kj + l) / std::tgamma(half_kj);
      double li = 0.0;
      for (int i = 0; i <= j - 2 * l - 1; ++i) {
        double sign = ((i + l) % 2 == 0) ? 1.0 : -1.0;
        li += sign * std::pow(a, i + l) * binomial(k1 - 1, j - 1 - 2 * l - i) *
              binomial(k2 - 1, i);
      }
      inner += gamma_ratio / factorial(l) * li;
    }
    double sign_j = ((j - 1) % 2 == 0) ? 1.0 : -1.0;
    s.m[j] = std::tgamma(half_kj) /
             (std::pow(2.0, 0.5 * (j - 2)) * std::tgamma(0.5 * k1) *
              std::tgamma(0.5 * k2)) *
             std::pow(a, 0.5 * (k1 - j)) *
             std::pow(1.0 + a, -0.5 * (k1 + k2 - 2)) * sign_j *
             factorial(j - 1) * inner;
  }
  return s;
}

double K_jl(int j, int l, double theta) {
  if (j < 2 || l < 0 || l > j - 2)
    throw std::invalid_argument("K_jl: requires j >= 2, 0 <= l <= j-2");
  if (theta <= 0.0 || theta >= M_PI)
    throw std::invalid_argument("K_jl: theta must lie in (0, pi)");
  if (j == 2 && l == 0) return M_PI - theta;  // integrand is 1
  auto integrand = [j, l](double t) {
    return std::pow(std::sin(t), j - 2 - l) * std::pow(std::cos(t), l);
  };
  return (j - 1) * integrate(integrand, 0.0, M_PI - theta, 1e-10);
}

KjlDiagnostic K_jl_diagnostic(int j, int l, double theta) {
  KjlDiagnostic d{};
  d.quadrature = K_jl(j, l, theta);
  const double nu1 = 0.5 * (j - 1 - l), nu2 = 0.5 * (l + 1);
  const double x = std::sqrt(std::sin(theta));
  const double half = 0.5 * (j - 1);
  double ib = incomplete_beta(nu1, nu2, x);
  double b = beta_fn(nu1, nu2);
  d.branch_theta_ge_half_pi = half * ib;
  double sign = (l % 2 == 0) ? 1.0 : -1.0;
  d.branch_theta_lt_half_pi = sign * half * (b - ib) + half * b;
  return d;
}

namespace {

// Gaussian mass of the angular sector from w: the radial integral has the
// closed form 1 - b sqrt(2pi) e^{b^2/2} (1 - Phi(b)) with b = <w, dir>;
// e^{b^2/2}(1-Phi(b)) is evaluated through log_erfc for stability.
double sector_radial(double b) {
  double scaled =
      std::exp(0.5 * b * b + gsl_sf_log_erfc(b / std::sqrt(2.0)) - M_LN2);
  return 1.0 - b * kSqrt2Pi * scaled;
}

double cone_gaussian_mass(const Cone2& c) {
  const double theta = cone_angle(c);
  const Eigen::Vector2d n = cone_v1_perp(c);
  auto integrand = [&](double t) {
    Eigen::Vector2d dir = std::cos(t) * c.v1 + std::sin(t) * n;
    return sector_radial(c.apex.dot(dir));
  };
  double angular = integrate(integrand, 0.0, theta, 1e-10);
  return std::exp(-0.5 * c.apex.squaredNorm()) / kTwoPi * angular;
}

}  // namespace

GmfSeries gmf_cone2(const Cone2& cone, int J) {
  validate_cone(cone);
  if (J < 0) throw std::invalid_argument("gmf_cone2: J must be >= 0");
  const double theta = cone_angle(cone);
  const Eigen::Vector2d v1p = cone_v1_perp(cone);
  const Eigen::Vector2d v2p = cone_v2_perp(cone);
  const Eigen::Vector2d& w = cone.apex;

  const double a1 = cone.v1.dot(w), b1 = v1p.dot(w);
  const double a2 = cone.v2.dot(w), b2 = v2p.dot(w);

  GmfSeries s;
  s.m.resize(J + 1);
  s.m[0] = cone_gaussian_mass(cone);
  for (int j = 1; j <= J; ++j) {
    double edges = (1.0 - gauss_cdf(a1)) * gauss_pdf(b1) * hermite(j - 1, b1) +
                   (1.0 - gauss_cdf(a2)) * gauss_pdf(b2) * hermite(j - 1, b2);
    double apex = 0.0;
    if (j >= 2) {
      for (int l = 0; l <= j - 2; ++l)
        apex += binomial(j - 2, l) * K_jl(j, l, theta) *
                hermite(j - 2 - l, a1) * hermite(l, b1);
      apex *= std::exp(-0.5 * w.squaredNorm()) / kTwoPi;
    }
    s.m[j] = edges + apex;
  }
  return s;
}

Cone2 conjunction_cone_params(double u, double rho) {
  if (!(std::abs(rho) < 1.0))
    throw std::invalid_argument("conjunction_cone_params: |rho| < 1 required");
  const double root = std::sqrt(1.0 - rho * rho);
  Cone2 c;
  c.v1 = Eigen::Vector2d(0.0, 1.0);
  c.v2 = Eigen::Vector2d(root, -rho);
  c.apex = Eigen::Vector2d(u, u * (1.0 - rho) / root);
  return c;
}

Cone2 conjunction_cone_alt_apex(double u, double rho) {
  Cone2 c = conjunction_cone_params(u, rho);
  c.apex = Eigen::Vector2d(u, u / std::sqrt(1.0 + rho));
  return c;
}

GmfSeries gmf_boundary_integral(const BoundaryData& boundary, int J, double m0) {
  if (J < 0) throw std::invalid_argument("gmf_boundary_integral: J must be >= 0");
  const int k = boundary.k;
  const int max_order = std::min(J, k);
  for (const BoundaryNode& node : boundary.nodes) {
    if (static_cast<int>(node.weights.size()) < max_order)
      throw std::invalid_argument(
          "gmf_boundary_integral: incomplete boundary data (missing weight orders)");
  }
  GmfSeries s;
  s.m.assign(J + 1, 0.0);
  s.m[0] = m0;
  const double norm = std::pow(kTwoPi, -0.5 * k);
  for (int l = 1; l <= J; ++l) {
    double acc = 0.0;
    for (int m = 0; m <= l - 1; ++m) {
      int weight_order = l - m;            // order of M^lambda_{l-m}(D, dp)
      if (weight_order > k) continue;      // vanishes beyond ambient dimension
      double inner = 0.0;
      for (const BoundaryNode& node : boundary.nodes) {
        double pn = node.position.dot(node.normal);
        inner += hermite(m, pn) *
                 std::exp(-0.5 * node.position.squaredNorm()) *
                 node.weights[weight_order - 1];
      }
      double sign = (m % 2 == 0) ? 1.0 : -1.0;
      acc += sign * factorial(l - 1) / factorial(m) * inner;
    }
    s.m[l] = norm * acc;
  }
  return s;
}

CoareaM1M2 gmf_m1_m2_coarea(const ImplicitDomain& domain, double epsilon,
                            std::uint64_t n_samples, std::uint64_t seed) {
  if (epsilon <= 0.0)
    throw std::invalid_argument("gmf_m1_m2_coarea: epsilon must be positive");
  if (n_samples == 0)
    throw std::invalid_argument("gmf_m1_m2_coarea: n_samples must be positive");
  const SmoothMap& map = domain.map;
  if (!map.value || !map.gradient || !map.hessian)
    throw std::invalid_argument(
        "gmf_m1_m2_coarea: value, gradient and hessian evaluators required");
  const int k = map.k;
  const double u = domain.level;
  const CounterRng rng(seed);

  struct Acc {
    double s1 = 0, s1_sq = 0, s2 = 0, s2_sq = 0;
    std::uint64_t hits = 0;
  };
  auto block_fn = [&](std::uint64_t lo, std::uint64_t hi) {
    Acc acc;
    Eigen::VectorXd z(k);
    for (std::uint64_t s = lo; s < hi; ++s) {
      for (int d = 0; d < k; ++d) z(d) = rng.normal(s, d);
      double f = map.value(z);
      if (std::abs(f - u) >= epsilon) continue;
      ++acc.hits;
      Eigen::VectorXd g = map.gradient(z);
      Eigen::MatrixXd h = map.hessian(z);
      double gn2 = g.squaredNorm();
      double w1 = std::sqrt(gn2);
      // -LF + Hess F(grad, grad)/|grad|^2, L the Ornstein-Uhlenbeck operator
      double w2 = -(h.trace() - z.dot(g)) + g.dot(h * g) / gn2;
      acc.s1 += w1;
      acc.s1_sq += w1 * w1;
      acc.s2 += w2;
      acc.s2_sq += w2 * w2;
    }
    return acc;
  };
  auto combine = [](Acc a, const Acc& b) {
    a.s1 += b.s1;
    a.s1_sq += b.s1_sq;
    a.s2 += b.s2;
    a.s2_sq += b.s2_sq;
    a.hits += b.hits;
    return a;
  };
  Acc total = blocked_reduce<Acc>(n_samples, block_fn, combine);
  if (total.hits == 0)
    throw std::runtime_error("gmf_m1_m2_coarea: window too narrow (no samples)");

  const double n = static_cast<double>(n_samples);
  const double scale = 1.0 / (2.0 * epsilon);
  auto finish = [&](double sum, double sum_sq, double& est, double& se) {
    double mean = sum / n;
    double var = std::max(0.0, sum_sq / n - mean * mean);
    est = scale * mean;
    se = scale * std::sqrt(var / std::max(n - 1.0, 1.0));
  };
  CoareaM1M2 out{};
  finish(total.s1, total.s1_sq, out.m1, out.m1_se);
  finish(total.s2, total.s2_sq, out.m2, out.m2_se);
  return out;
}

GmfSeries gmf_series(const Domain& domain, int J, double tol) {
  return std::visit(
      [&](const auto& d) -> GmfSeries {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          validate_unit(d.direction, "HalfSpace.direction");
          return gmf_half_space(d.level, J);
        } else if constexpr (std::is_same_v<T, BallComplement>) {
          return gmf_chi(d.k, d.radius, J);
        } else if constexpr (std::is_same_v<T, NoncentralBallComplement>) {
          return gmf_noncentral_chi(d.k, d.center.squaredNorm(), d.radius, J,
                                    tol);
        } else if constexpr (std::is_same_v<T, FRegion>) {
          return gmf_f_field(d.k1, d.k2, d.level, J);
        } else if constexpr (std::is_same_v<T, Cone2>) {
          return gmf_cone2(d, J);
        } else {
          throw std::invalid_argument(
              "gmf_series: no closed form for implicit domains");
        }
      },
      domain);
}

}  // namespace gkf
