#include "ifcrack/quadrature.hpp"

#include <cmath>
#include <string>

namespace ifcrack::numerics {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) raise(ErrorKind::Domain, "rel_tol must be positive");
  if (!(abs_tol >= 0.0)) raise(ErrorKind::Domain, "abs_tol must be non-negative");
  if (max_subdivisions < 1) raise(ErrorKind::Domain, "max_subdivisions must be at least 1");
  if (!(truncation_radius >= 0.0)) {
    raise(ErrorKind::Domain, "truncation_radius must be positive (or 0 for the default)");
  }
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
  QuadratureSpec out = *this;
  out.rel_tol /= factor;
  out.abs_tol /= factor;
  out.max_subdivisions *= 4;
  return out;
}

namespace {

// Integral of h over [lo, hi] with breakpoints at successive decades, so that
// a feature near t ~ 1 is not lost in a panel spanning many decades.
template <class H>
double integrate_by_decades(H& h, double lo, double hi, double rel, double abs, int max_sub) {
  double total = 0.0;
  double a = lo;
  while (a < hi) {
    const double b = a <= 0.0 ? std::min(hi, 1.0) : std::min(hi, 10.0 * a);
    total += integrate_gk(h, a, b, rel, abs, max_sub).value;
    a = b;
  }
  return total;
}

}  // namespace

double pv_integral_even_logkernel(const std::function<double(double)>& g, double xi,
                                  const QuadratureSpec& spec) {
  spec.validate();
  if (!(xi > 0.0) || !std::isfinite(xi)) raise(ErrorKind::Domain, "pv integral needs xi > 0");
  const double rel = 0.1 * spec.rel_tol;
  const double abs = 0.1 * spec.abs_tol;
  const int max_sub = spec.max_subdivisions;
  const double gx = g(xi);
  const double x2 = xi * xi;

  // On [0, 2 xi] the subtracted integrand is regular. Deep refinement can
  // still put a node on t = xi, where the removable value g'(xi)/(2 xi) is
  // taken from a central difference.
  auto regular = [&](double t) {
    if (std::abs(t - xi) <= 1e-9 * xi) {
      const double h = 1e-5 * xi;
      return (g(xi + h) - g(xi - h)) / (2.0 * h) / (2.0 * xi);
    }
    return (g(t) - gx) / ((t - xi) * (t + xi));
  };
  double near = integrate_by_decades(regular, 0.0, xi, rel, abs, max_sub);
  near += integrate_gk(regular, xi, 2.0 * xi, rel, abs, max_sub).value;
  // PV of dt/(t^2 - xi^2) over [0, 2 xi].
  near += gx * std::log(1.0 / 3.0) / (2.0 * xi);

  auto plain = [&](double t) { return g(t) / ((t - xi) * (t + xi)); };
  const double top = std::max(2.0 * xi, 1.0);
  double tail = 0.0;
  if (top > 2.0 * xi) tail += integrate_by_decades(plain, 2.0 * xi, top, rel, abs, max_sub);
  auto inverted = [&](double u) { return g(1.0 / u) / (1.0 - x2 * u * u); };
  tail += integrate_gk(inverted, 0.0, 1.0 / top, rel, abs, max_sub).value;

  const double result = near + tail;
  if (!std::isfinite(result)) raise(ErrorKind::NonFiniteSample, "pv integral is not finite");
  return result;
}

}  // namespace ifcrack::numerics
