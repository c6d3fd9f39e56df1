#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <variant>

namespace gkf {

// Smooth scalar map descriptor with gradient (and optionally Hessian)
// evaluators; the level sets F^{-1}{u} are the surfaces the Monte Carlo
// estimators integrate over.
struct SmoothMap {
  int k = 0;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;  // optional
};

// Catalog of regions of Gaussian-measure space whose tube geometry we know.
struct HalfSpace {
  Eigen::VectorXd direction;  // unit vector
  double level = 0.0;         // D = { <x, direction> >= level }
};

struct BallComplement {
  int k = 0;
  double radius = 0.0;  // D = { |x| >= radius }
};

struct NoncentralBallComplement {
  int k = 0;
  Eigen::VectorXd center;
  double radius = 0.0;  // D = { |x - center| >= radius }
};

struct FRegion {
  int k1 = 0, k2 = 0;
  double level = 0.0;  // D = { F_{k1,k2}(x) >= level }, level > 0
};

struct Cone2 {
  Eigen::Vector2d v1, v2;  // unit, non-collinear edge directions
  Eigen::Vector2d apex;
};

struct ImplicitDomain {
  SmoothMap map;
  double level = 0.0;  // D = { F(x) >= level }
  double critical_radius_hint = 1.0;
};

using Domain = std::variant<HalfSpace, BallComplement, NoncentralBallComplement,
                            FRegion, Cone2, ImplicitDomain>;

int ambient_dim(const Domain& d);

// Opening angle of a cone: arccos<v1, v2>.
double cone_angle(const Cone2& c);

// Unit vector orthogonal to v1 with <v1perp, v2> > 0 (and symmetrically).
Eigen::Vector2d cone_v1_perp(const Cone2& c);
Eigen::Vector2d cone_v2_perp(const Cone2& c);

void validate_unit(const Eigen::VectorXd& v, const char* what);

}  // namespace gkf
