#pragma once

#include <vector>

namespace gkf {

// Lipschitz-Killing curvatures L_0..L_n of a parameter space, scaled so that
// the induced metric has second spectral moment mu2 per coordinate
// (isotropic unit-variance fields): lengths scale by sqrt(mu2).
struct LkcVector {
  std::vector<double> l;
  int dim() const { return static_cast<int>(l.size()) - 1; }
  double operator[](int j) const { return l.at(j); }
};

// Axis-aligned box with the given side lengths.
LkcVector lkc_box(const std::vector<double>& sides, double mu2);

// Interval [0, length].
LkcVector lkc_interval(double length, double mu2);

// Flat 2-torus with side length `period` in each coordinate (no boundary).
LkcVector lkc_flat_torus2(double period, double mu2);

// Round 2-sphere of radius `radius` embedded with constant curvature.
LkcVector lkc_sphere2(double radius, double mu2);

// Euclidean volume of the outer tube of radius r around a box (Steiner).
double steiner_tube_volume_box(const std::vector<double>& sides, double r);

// Minkowski functionals M_{k-j} = (k-j)! * omega_{k-j} * L_j for a set in R^k.
std::vector<double> minkowski_from_lkc(const LkcVector& lkc, int k);

}  // namespace gkf
