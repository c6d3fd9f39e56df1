#include "gkf/lkc.hpp"

#include <cmath>
#include <stdexcept>

#include "gkf/special_fn.hpp"

namespace gkf {

namespace {

// Elementary symmetric polynomials e_0..e_n of the inputs.
std::vector<double> elementary_symmetric(const std::vector<double>& x) {
  std::vector<double> e(x.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = std::min(i + 1, x.size()); j >= 1; --j)
      e[j] += x[i] * e[j - 1];
  return e;
}

void check_positive(const std::vector<double>& sides, double mu2) {
  if (sides.empty()) throw std::invalid_argument("lkc_box: empty side list");
  for (double t : sides)
    if (t <= 0.0) throw std::invalid_argument("lkc_box: sides must be positive");
  if (mu2 <= 0.0) throw std::invalid_argument("mu2 must be positive");
}

}  // namespace

LkcVector lkc_box(const std::vector<double>& sides, double mu2) {
  check_positive(sides, mu2);
  std::vector<double> e = elementary_symmetric(sides);
  LkcVector out;
  out.l.resize(sides.size() + 1);
  for (std::size_t j = 0; j < out.l.size(); ++j)
    out.l[j] = e[j] * std::pow(mu2, 0.5 * j);
  return out;
}

LkcVector lkc_interval(double length, double mu2) {
  return lkc_box({length}, mu2);
}

LkcVector lkc_flat_torus2(double period, double mu2) {
  if (period <= 0.0 || mu2 <= 0.0)
    throw std::invalid_argument("lkc_flat_torus2: bad arguments");
  return LkcVector{{0.0, 0.0, period * period * mu2}};
}

LkcVector lkc_sphere2(double radius, double mu2) {
  if (radius <= 0.0 || mu2 <= 0.0)
    throw std::invalid_argument("lkc_sphere2: bad arguments");
  return LkcVector{{2.0, 0.0, 4.0 * M_PI * radius * radius * mu2}};
}

double steiner_tube_volume_box(const std::vector<double>& sides, double r) {
  check_positive(sides, 1.0);
  if (r < 0.0)
    throw std::invalid_argument("steiner_tube_volume_box: r must be >= 0");
  std::vector<double> e = elementary_symmetric(sides);
  const int n = static_cast<int>(sides.size());
  double vol = 0.0;
  for (int j = 0; j <= n; ++j)
    vol += e[n - j] * unit_ball_volume(j) * std::pow(r, j);
  return vol;
}

std::vector<double> minkowski_from_lkc(const LkcVector& lkc, int k) {
  if (k < lkc.dim())
    throw std::invalid_argument("minkowski_from_lkc: k < intrinsic dimension");
  std::vector<double> m(k + 1, 0.0);
  for (int j = 0; j <= lkc.dim(); ++j)
    m[k - j] = factorial(k - j) * unit_ball_volume(k - j) * lkc[j];
  return m;
}

}  // namespace gkf
