#pragma once

#include <string>
#include <vector>

#include "gkf/gmf.hpp"
#include "gkf/lkc.hpp"

namespace gkf {

// Result of the kinematic-formula sum
//   E[chi] = sum_j L_j * (2 pi)^{-j/2} * M_j.
struct GkfResult {
  double expected_chi = 0.0;
  std::vector<double> terms;  // one addend per j = 0..n
  int truncation_order = 0;
};

// Combines parameter-space curvatures with a Gaussian Minkowski series.
// The series must have order >= lkc.dim(); otherwise this throws.
GkfResult expected_euler_char(const LkcVector& lkc, const GmfSeries& series);

// Euler-characteristic densities rho_j(u) = (2 pi)^{-j/2} M_j for the named
// marginal family. Supported families: "gaussian", "chi2" (dof), "noncentral-
// chi2" (dof, noncentrality), "f" (dof1, dof2), "conjunction" (rho).
std::vector<double> ec_densities(const std::string& family, double u, int J,
                                 const std::vector<double>& params = {});

// Single density rho_j(u). Also accepts "chi" (dof), which takes the level on
// the chi scale: ec_density("chi2", j, u) == ec_density("chi", j, sqrt(u)).
double ec_density(const std::string& family, int j, double u,
                  const std::vector<double>& params = {});

// Expected Euler characteristic of the level-u excursion set for a family.
GkfResult expected_euler_char(const LkcVector& lkc, const std::string& family,
                              double u, const std::vector<double>& params = {});

struct TailApprox {
  double value = 0.0;
  bool clamped = false;
};

// Uses E[chi] as an approximation to P(sup f >= u), clamped to [0, 1].
TailApprox sup_tail_approx(const LkcVector& lkc, const std::string& family,
                           double u, const std::vector<double>& params = {});

}  // namespace gkf
