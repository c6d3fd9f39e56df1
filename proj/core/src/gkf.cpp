#include "gkf/gkf.hpp"

#include <cmath>
#include <stdexcept>

namespace gkf {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

GmfSeries family_series(const std::string& family, double u, int J,
                        const std::vector<double>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("ec_densities: family '" + family +
                                  "' expects " + std::to_string(n) +
                                  " parameter(s)");
  };
  if (family == "gaussian") {
    need(0);
    return gmf_half_space(u, J);
  }
  if (family == "chi2") {
    need(1);
    return gmf_chi(static_cast<int>(params[0]), std::sqrt(u), J);
  }
  if (family == "chi") {
    need(1);
    return gmf_chi(static_cast<int>(params[0]), u, J);
  }
  if (family == "noncentral-chi2") {
    need(2);
    return gmf_noncentral_chi(static_cast<int>(params[0]), params[1],
                              std::sqrt(u), J);
  }
  if (family == "f") {
    need(2);
    return gmf_f_field(static_cast<int>(params[0]),
                       static_cast<int>(params[1]), u, J);
  }
  if (family == "conjunction") {
    need(1);
    return gmf_cone2(conjunction_cone_params(u, params[0]), J);
  }
  throw std::invalid_argument("ec_densities: unknown family '" + family + "'");
}

}  // namespace

GkfResult expected_euler_char(const LkcVector& lkc, const GmfSeries& series) {
  const int n = lkc.dim();
  if (series.order() < n)
    throw std::invalid_argument(
        "expected_euler_char: Minkowski series order is below the parameter "
        "space dimension");
  GkfResult r;
  r.truncation_order = n;
  r.terms.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    r.terms[j] = lkc[j] * std::pow(kTwoPi, -0.5 * j) * series[j];
    r.expected_chi += r.terms[j];
  }
  return r;
}

std::vector<double> ec_densities(const std::string& family, double u, int J,
                                 const std::vector<double>& params) {
  GmfSeries s = family_series(family, u, J, params);
  std::vector<double> rho(J + 1);
  for (int j = 0; j <= J; ++j) rho[j] = std::pow(kTwoPi, -0.5 * j) * s[j];
  return rho;
}

double ec_density(const std::string& family, int j, double u,
                  const std::vector<double>& params) {
  if (j < 0) throw std::invalid_argument("ec_density: j must be >= 0");
  return ec_densities(family, u, j, params)[j];
}

GkfResult expected_euler_char(const LkcVector& lkc, const std::string& family,
                              double u, const std::vector<double>& params) {
  return expected_euler_char(lkc,
                             family_series(family, u, lkc.dim(), params));
}

TailApprox sup_tail_approx(const LkcVector& lkc, const std::string& family,
                           double u, const std::vector<double>& params) {
  GkfResult r = expected_euler_char(lkc, family, u, params);
  TailApprox t;
  t.value = r.expected_chi;
  if (t.value < 0.0) {
    t.value = 0.0;
    t.clamped = true;
  } else if (t.value > 1.0) {
    t.value = 1.0;
    t.clamped = true;
  }
  return t;
}

}  // namespace gkf
