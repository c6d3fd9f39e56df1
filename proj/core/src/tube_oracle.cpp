#include "gkf/tube_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gkf/gmf.hpp"
#include "gkf/parallel.hpp"
#include "gkf/rng.hpp"
#include "gkf/special_fn.hpp"

namespace gkf {

namespace {

double dist_cone2(const Cone2& c, const Eigen::Vector2d& x) {
  const Eigen::Vector2d q = x - c.apex;
  // Membership: q = a v1 + b v2 with a, b >= 0 (v1, v2 independent).
  const double det = c.v1.x() * c.v2.y() - c.v1.y() * c.v2.x();
  const double a = (q.x() * c.v2.y() - q.y() * c.v2.x()) / det;
  const double b = (c.v1.x() * q.y() - c.v1.y() * q.x()) / det;
  if (a >= 0.0 && b >= 0.0) return 0.0;
  auto ray_dist = [&](const Eigen::Vector2d& v) {
    double t = std::max(0.0, q.dot(v));
    return (q - t * v).norm();
  };
  return std::min(ray_dist(c.v1), ray_dist(c.v2));
}

// The F region {k2 |x1|^2 >= u k1 |x2|^2} depends on x only through the
// block norms (a, b) = (|x1|, |x2|), reducing the projection to the planar
// quadrant sector {a >= c b} with c = sqrt(u k1 / k2).
double dist_f_region(const FRegion& f, const Eigen::VectorXd& x) {
  const double a = x.head(f.k1).norm();
  const double b = x.tail(f.k2).norm();
  const double c = std::sqrt(f.level * f.k1 / f.k2);
  if (a >= c * b) return 0.0;
  return (c * b - a) / std::sqrt(1.0 + c * c);
}

double dist_implicit(const ImplicitDomain& d, const Eigen::VectorXd& x) {
  if (!d.map.value || !d.map.gradient)
    throw std::invalid_argument(
        "distance_to_domain: implicit domain needs value and gradient");
  const double u = d.level;
  if (d.map.value(x) >= u) return 0.0;
  constexpr int kMaxIter = 200;
  constexpr double kTol = 1e-10;
  Eigen::VectorXd p = x;
  for (int it = 0; it < kMaxIter; ++it) {
    double f = d.map.value(p);
    Eigen::VectorXd g = d.map.gradient(p);
    double gn2 = g.squaredNorm();
    if (gn2 < 1e-30)
      throw std::runtime_error("distance_to_domain: projection failure "
                               "(vanishing gradient)");
    // First-order step back onto the level set.
    p += (u - f) * g / gn2;
    // Slide along the tangent toward the foot of the perpendicular from x.
    Eigen::VectorXd diff = x - p;
    Eigen::VectorXd ghat = d.map.gradient(p).normalized();
    Eigen::VectorXd tangential = diff - diff.dot(ghat) * ghat;
    p += tangential;
    if (tangential.norm() < kTol && std::abs(d.map.value(p) - u) < kTol)
      return (x - p).norm();
  }
  throw std::runtime_error(
      "distance_to_domain: projection failure (iteration cap)");
}

}  // namespace

double distance_to_domain(const Domain& domain, const Eigen::VectorXd& x) {
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          return std::max(0.0, d.level - x.dot(d.direction));
        } else if constexpr (std::is_same_v<T, BallComplement>) {
          return std::max(0.0, d.radius - x.norm());
        } else if constexpr (std::is_same_v<T, NoncentralBallComplement>) {
          return std::max(0.0, d.radius - (x - d.center).norm());
        } else if constexpr (std::is_same_v<T, Cone2>) {
          return dist_cone2(d, Eigen::Vector2d(x));
        } else if constexpr (std::is_same_v<T, FRegion>) {
          return dist_f_region(d, x);
        } else {
          return dist_implicit(d, x);
        }
      },
      domain);
}

TubeCurve mc_tube_curve(const Domain& domain, const std::vector<double>& radii,
                        std::uint64_t n_samples, std::uint64_t seed) {
  if (radii.empty())
    throw std::invalid_argument("mc_tube_curve: empty radius list");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0.0 || (i > 0 && radii[i] <= radii[i - 1]))
      throw std::invalid_argument(
          "mc_tube_curve: radii must be nonnegative and strictly increasing");
  }
  if (n_samples == 0)
    throw std::invalid_argument("mc_tube_curve: n_samples must be positive");

  const int k = ambient_dim(domain);
  const CounterRng rng(seed);
  const std::size_t nr = radii.size();

  using Counts = std::vector<std::uint64_t>;
  auto block_fn = [&](std::uint64_t lo, std::uint64_t hi) {
    Counts cnt(nr + 1, 0);
    Eigen::VectorXd z(k);
    for (std::uint64_t s = lo; s < hi; ++s) {
      for (int d = 0; d < k; ++d) z(d) = rng.normal(s, d);
      double dist = distance_to_domain(domain, z);
      // First radius that covers this sample; suffix-sum later.
      auto it = std::lower_bound(radii.begin(), radii.end(), dist);
      ++cnt[static_cast<std::size_t>(it - radii.begin())];
    }
    return cnt;
  };
  auto combine = [](Counts a, const Counts& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  Counts cnt = blocked_reduce<Counts>(n_samples, block_fn, combine);

  TubeCurve curve;
  curve.radii = radii;
  curve.n_samples = n_samples;
  curve.seed = seed;
  curve.volumes.resize(nr);
  curve.std_errors.resize(nr);
  const double n = static_cast<double>(n_samples);
  std::uint64_t cum = 0;
  for (std::size_t i = 0; i < nr; ++i) {
    cum += cnt[i];
    double p = static_cast<double>(cum) / n;
    curve.volumes[i] = p;
    curve.std_errors[i] = std::sqrt(std::max(p * (1.0 - p), 1.0 / n) / n);
  }
  return curve;
}

TubeVolume mc_tube_volume(const Domain& domain, double r,
                          std::uint64_t n_samples, std::uint64_t seed) {
  if (r < 0.0) throw std::invalid_argument("mc_tube_volume: r must be >= 0");
  TubeCurve c = mc_tube_curve(domain, {r}, n_samples, seed);
  return TubeVolume{c.volumes[0], c.std_errors[0]};
}

CoefficientFit fit_tube_coefficients(const TubeCurve& curve, int J) {
  if (J < 0) throw std::invalid_argument("fit_tube_coefficients: J >= 0");
  const int degree = J + 2;  // guard degrees absorb truncation bias
  const int ncoef = degree + 1;
  const int npts = static_cast<int>(curve.radii.size());
  if (npts < 2 * (J + 2))
    throw std::invalid_argument(
        "fit_tube_coefficients: need at least 2(J+2) radii");
  if (curve.volumes.size() != curve.radii.size() ||
      curve.std_errors.size() != curve.radii.size())
    throw std::invalid_argument("fit_tube_coefficients: ragged curve");

  Eigen::MatrixXd X(npts, ncoef);
  Eigen::VectorXd y(npts), w(npts);
  for (int i = 0; i < npts; ++i) {
    double r = curve.radii[i];
    double pw = 1.0;
    for (int j = 0; j < ncoef; ++j) {
      X(i, j) = pw / factorial(j);
      pw *= r;
    }
    y(i) = curve.volumes[i];
    double se = curve.std_errors[i];
    if (se <= 0.0)
      throw std::invalid_argument(
          "fit_tube_coefficients: standard errors must be positive");
    w(i) = 1.0 / (se * se);
  }
  Eigen::MatrixXd Xw = w.cwiseSqrt().asDiagonal() * X;
  Eigen::VectorXd yw = w.cwiseSqrt().asDiagonal() * y;
  // Equilibrate columns so the condition diagnostic measures collinearity
  // rather than the trivial scale spread of the monomial basis.
  Eigen::VectorXd colscale(ncoef);
  for (int j = 0; j < ncoef; ++j) {
    double nrm = Xw.col(j).norm();
    colscale(j) = nrm > 0.0 ? 1.0 / nrm : 1.0;
  }
  Eigen::MatrixXd Xe = Xw * colscale.asDiagonal();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      Xe, Eigen::ComputeThinU | Eigen::ComputeThinV);
  double cond = svd.singularValues()(0) /
                svd.singularValues()(svd.singularValues().size() - 1);
  if (!(cond <= 1e10))
    throw std::runtime_error("fit_tube_coefficients: fit unstable "
                             "(ill-conditioned design)");
  Eigen::VectorXd beta = colscale.asDiagonal() * svd.solve(yw);

  CoefficientFit fit;
  fit.order = J;
  fit.condition = cond;
  // Naive WLS covariance; conservative for curves built on shared samples.
  Eigen::MatrixXd inv_e =
      (Xe.transpose() * Xe).ldlt().solve(Eigen::MatrixXd::Identity(ncoef, ncoef));
  fit.covariance = colscale.asDiagonal() * inv_e * colscale.asDiagonal();
  fit.coefficients.assign(beta.data(), beta.data() + (J + 1));
  return fit;
}

McEstimate coarea_mc(const SmoothMap& map, double u,
                     const std::function<double(const Eigen::VectorXd&)>& weight,
                     double epsilon, std::uint64_t n_samples,
                     std::uint64_t seed) {
  if (epsilon <= 0.0)
    throw std::invalid_argument("coarea_mc: epsilon must be positive");
  if (n_samples == 0)
    throw std::invalid_argument("coarea_mc: n_samples must be positive");
  if (!map.value || !map.gradient)
    throw std::invalid_argument("coarea_mc: value and gradient required");

  const int k = map.k;
  const CounterRng rng(seed);
  struct Acc {
    double s = 0, s_sq = 0;
    std::uint64_t hits = 0;
  };
  auto block_fn = [&](std::uint64_t lo, std::uint64_t hi) {
    Acc acc;
    Eigen::VectorXd z(k);
    for (std::uint64_t smp = lo; smp < hi; ++smp) {
      for (int d = 0; d < k; ++d) z(d) = rng.normal(smp, d);
      double f = map.value(z);
      if (std::abs(f - u) >= epsilon) continue;
      ++acc.hits;
      double v = map.gradient(z).norm() * weight(z);
      acc.s += v;
      acc.s_sq += v * v;
    }
    return acc;
  };
  auto combine = [](Acc a, const Acc& b) {
    a.s += b.s;
    a.s_sq += b.s_sq;
    a.hits += b.hits;
    return a;
  };
  Acc total = blocked_reduce<Acc>(n_samples, block_fn, combine);
  if (total.hits == 0)
    throw std::runtime_error("coarea_mc: window too narrow (no samples)");

  const double n = static_cast<double>(n_samples);
  const double scale = 1.0 / (2.0 * epsilon);
  double mean = total.s / n;
  double var = std::max(0.0, total.s_sq / n - mean * mean);
  McEstimate e;
  e.estimate = scale * mean;
  e.se = scale * std::sqrt(var / std::max(n - 1.0, 1.0));
  return e;
}

}  // namespace gkf
