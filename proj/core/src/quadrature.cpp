#include "gkf/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>
#include <stdexcept>

namespace gkf {
namespace {

double call_fn(double x, void* params) {
  auto* f = static_cast<const std::function<double(double)>*>(params);
  return (*f)(x);
}

struct GslInit {
  GslInit() { gsl_set_error_handler_off(); }
};
const GslInit gsl_init_once{};

using Workspace =
    std::unique_ptr<gsl_integration_workspace,
                    decltype(&gsl_integration_workspace_free)>;

Workspace make_workspace(std::size_t n) {
  return {gsl_integration_workspace_alloc(n), gsl_integration_workspace_free};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol) {
  auto ws = make_workspace(4096);
  gsl_function gf{&call_fn, const_cast<std::function<double(double)>*>(&f)};
  double result = 0.0, abserr = 0.0;
  int status = gsl_integration_qags(&gf, a, b, abs_tol, rel_tol, 4096,
                                    ws.get(), &result, &abserr);
  if (status != GSL_SUCCESS && status != GSL_EROUND)
    throw std::runtime_error("adaptive quadrature failed");
  return result;
}

double integrate_upper(const std::function<double(double)>& f, double a,
                       double rel_tol, double abs_tol) {
  auto ws = make_workspace(4096);
  gsl_function gf{&call_fn, const_cast<std::function<double(double)>*>(&f)};
  double result = 0.0, abserr = 0.0;
  int status = gsl_integration_qagiu(&gf, a, abs_tol, rel_tol, 4096, ws.get(),
                                     &result, &abserr);
  if (status != GSL_SUCCESS && status != GSL_EROUND)
    throw std::runtime_error("adaptive quadrature failed");
  return result;
}

}  // namespace gkf
