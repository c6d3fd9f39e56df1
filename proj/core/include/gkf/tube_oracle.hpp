#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gkf/domain.hpp"

namespace gkf {

// Monte Carlo Gaussian tube volumes evaluated on a common sample set
// (common random numbers across radii), so finite differences of the curve
// are low-variance.
struct TubeCurve {
  std::vector<double> radii;       // strictly increasing, nonnegative
  std::vector<double> volumes;     // estimated Gaussian tube volume per radius
  std::vector<double> std_errors;  // binomial SE per radius
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

struct CoefficientFit {
  int order = 0;                          // J
  std::vector<double> coefficients;       // fitted M_0..M_J (r^j/j! basis)
  Eigen::MatrixXd covariance;             // (J+3)x(J+3) incl. guard degrees
  double condition = 0.0;
};

// Euclidean distance from x to the domain (0 inside).
double distance_to_domain(const Domain& domain, const Eigen::VectorXd& x);

struct TubeVolume {
  double volume = 0.0;
  double se = 0.0;
};

// Fraction of N(0, I_k) samples within distance r of the domain.
TubeVolume mc_tube_volume(const Domain& domain, double r,
                          std::uint64_t n_samples, std::uint64_t seed);

// Full curve over the given radii on one shared sample set.
TubeCurve mc_tube_curve(const Domain& domain, const std::vector<double>& radii,
                        std::uint64_t n_samples, std::uint64_t seed);

// Weighted least squares of volumes on {r^j/j!, j = 0..J+2}; the two guard
// degrees absorb Taylor truncation bias and are dropped from the output.
CoefficientFit fit_tube_coefficients(const TubeCurve& curve, int J);

struct McEstimate {
  double estimate = 0.0;
  double se = 0.0;
};

// Window estimator of the Gaussian surface integral of `weight` over
// F^{-1}{u}: (1/2eps) E[ 1{|F - u| < eps} * |grad F| * weight ].
McEstimate coarea_mc(const SmoothMap& map, double u,
                     const std::function<double(const Eigen::VectorXd&)>& weight,
                     double epsilon, std::uint64_t n_samples,
                     std::uint64_t seed);

}  // namespace gkf
