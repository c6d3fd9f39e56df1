#pragma once

#include <functional>

namespace gkf {

// Adaptive quadrature (GSL QAGS) of f on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 1e-12);

// Adaptive quadrature on [a, +inf).
double integrate_upper(const std::function<double(double)>& f, double a,
                       double rel_tol = 1e-10, double abs_tol = 1e-12);

}  // namespace gkf
