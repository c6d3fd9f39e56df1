#pragma once

#include <cstdint>
#include <vector>

#include "gkf/domain.hpp"

namespace gkf {

// Gaussian Minkowski functionals M_0..M_J of a domain: M_j is the
// coefficient of r^j/j! in the Taylor expansion of the standard Gaussian
// volume of the tube T(D, r). The (2pi)^{-j/2} EC-density normalization
// deliberately does NOT live here (see gkf.hpp).
struct GmfSeries {
  std::vector<double> m;  // m[j] = M_j, j = 0..J

  int order() const { return static_cast<int>(m.size()) - 1; }
  double operator[](int j) const { return m[static_cast<std::size_t>(j)]; }
};

// Half-space at level u: M_0 = 1 - Phi(u), M_j = phi(u) H_{j-1}(u) for j >= 1.
GmfSeries gmf_half_space(double u, int J);

// Complement of the ball of radius x in R^k (the sqrt-chi^2 excursion set).
// Callers holding a chi^2 level u pass x = sqrt(u): the series is a property
// of the domain, so both the G and sqrt(G) presentations of the same
// excursion set give identical output.
GmfSeries gmf_chi(int k, double x, int J);

// Noncentral variant, alpha = |mu|^2; Poisson-weighted mixture of central
// series with k -> k + 2i, truncated like the noncentral chi density.
GmfSeries gmf_noncentral_chi(int k, double alpha, double x, int J,
                             double tol = 1e-12);

// F_{k1,k2} excursion region at level u > 0.
GmfSeries gmf_f_field(int k1, int k2, double u, int J);

// Independent closed-form route for the F field: per-order surface integral
// of Tr(S^m)/m! against the Gaussian (the shape-operator route), combined
// with the Hermite-at-zero weights. Used as a cross-check on gmf_f_field.
double f_field_surface_integral(int k1, int k2, double u, int m);
double gmf_f_field_via_surface(int k1, int k2, double u, int j);

// K_{j,l}(theta) = (j-1) * int_0^{pi-theta} sin^{j-2-l} t cos^l t dt,
// evaluated by adaptive quadrature of the defining integral.
double K_jl(int j, int l, double theta);

// The two printed closed-form branch readings for K_{j,l}; they do not match
// the defining integral under standard substitutions, so quadrature is
// authoritative and this exists purely as a diagnostic.
struct KjlDiagnostic {
  double quadrature;
  double branch_theta_ge_half_pi;
  double branch_theta_lt_half_pi;
};
KjlDiagnostic K_jl_diagnostic(int j, int l, double theta);

// Gaussian Minkowski functionals of a planar cone (two half-space edge terms
// plus an apex term weighted by K_{j,l}).
GmfSeries gmf_cone2(const Cone2& cone, int J);

// Cone for the conjunction (min of two rho-correlated unit Gaussians) at
// level u. The apex solves <v1perp, w> = <v2perp, w> = u exactly:
// w = (u, u(1-rho)/sqrt(1-rho^2)).
Cone2 conjunction_cone_params(double u, double rho);
// Same edges but the apex as printed in the source derivation,
// w = (u, u/sqrt(1+rho)); agrees with the derived apex only at rho = 0.
// Kept as a diagnostic.
Cone2 conjunction_cone_alt_apex(double u, double rho);

// Boundary discretization carrying Lebesgue curvature-measure weights:
// weights[m] is the local mass of the order-(m+1) Minkowski curvature
// measure at the node (weights[0] = surface measure).
struct BoundaryNode {
  Eigen::VectorXd position;
  Eigen::VectorXd normal;  // outward unit normal
  std::vector<double> weights;
};
struct BoundaryData {
  int k = 0;
  std::vector<BoundaryNode> nodes;
};

// Generic boundary-integral evaluator:
// M_l = (2pi)^{-k/2} sum_{m=0}^{l-1} (-1)^m (l-1)!/m!
//       sum_p H_m(<p, nu_p>) e^{-|p|^2/2} weight_{l-m}(p),
// with curvature weights of order > k identically zero. M_0 is supplied by
// the caller (it is a Gaussian probability, not a boundary integral).
GmfSeries gmf_boundary_integral(const BoundaryData& boundary, int J, double m0 = 0.0);

struct CoareaM1M2 {
  double m1, m1_se;
  double m2, m2_se;
};

// Kernel-window coarea estimates of M_1 and M_2 for an implicit domain:
//   M_1 = E[|grad F| | F = u] phi_F(u)
//   M_2 = E[-LF + Hess F(grad F, grad F)/|grad F|^2 | F = u] phi_F(u)
// via (1/2eps) E[1{|F - u| < eps} * w]. Bias is O(eps^2).
CoareaM1M2 gmf_m1_m2_coarea(const ImplicitDomain& domain, double epsilon,
                            std::uint64_t n_samples, std::uint64_t seed);

// Closed-form dispatch over the catalog (ImplicitDomain is not closed-form
// and throws).
GmfSeries gmf_series(const Domain& domain, int J, double tol = 1e-12);

}  // namespace gkf
