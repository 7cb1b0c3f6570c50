#include "ifcrack/expint.hpp"

#include <cmath>
#include <numbers>

#include "ifcrack/error.hpp"

namespace ifcrack::numerics {

using cplx = std::complex<double>;

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;
// Beyond this modulus the asymptotic series, truncated at its smallest term,
// is below rounding (the truncation error is about e^{-|z|}).
constexpr double kAsymptoticRadius = 40.0;
// The power series loses about (|z| + Re z) / ln 10 digits to cancellation.
constexpr double kSeriesLoss = 8.0;

cplx principal_log(cplx z) {
  // The cut is approached from above, so a negative real argument has arg pi
  // whatever the sign of its zero imaginary part.
  if (z.imag() == 0.0 && z.real() < 0.0) return {std::log(-z.real()), std::numbers::pi};
  return std::log(z);
}

cplx series(cplx z) {
  cplx sum = 0.0;
  cplx term = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= -z / static_cast<double>(k);
    const cplx add = term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  return -kEulerGamma - principal_log(z) - sum;
}

// e^z E1(z) = 1/(z + 1 - 1/(z + 3 - 4/(z + 5 - ...))) by modified Lentz.
cplx continued_fraction_scaled(cplx z) {
  constexpr double tiny = 1e-300;
  cplx b = z + 1.0;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int k = 1; k < 20000; ++k) {
    const double a = -static_cast<double>(k) * k;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return h;
  }
  raise(ErrorKind::NonConvergence, "E1 continued fraction did not converge");
}

// sum_{k>=1} (-1)^k k! / z^k, truncated at its smallest term; equals
// z e^z E1(z) - 1 to rounding for |z| >= kAsymptoticRadius.
cplx asymptotic_remainder(cplx z) {
  cplx sum = 0.0;
  cplx term = -1.0 / z;
  double last = std::abs(term);
  for (int k = 2; k < 200; ++k) {
    sum += term;
    const cplx next = term * (-static_cast<double>(k) / z);
    const double size = std::abs(next);
    if (size > last || size < 1e-18 * std::abs(sum)) break;
    term = next;
    last = size;
  }
  return sum;
}

void check(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    raise(ErrorKind::Domain, "E1 argument is not finite");
  }
  if (z == 0.0) raise(ErrorKind::Pole, "E1 has a logarithmic pole at z = 0");
}

bool large(cplx z) { return std::abs(z) >= kAsymptoticRadius; }
bool use_series(cplx z) { return std::abs(z) + z.real() < kSeriesLoss; }

}  // namespace

cplx expint_e1(cplx z) {
  check(z);
  if (!large(z) && use_series(z)) return series(z);
  return std::exp(-z) * expint_e1_scaled(z);
}

cplx expint_e1_scaled(cplx z) {
  check(z);
  // For large |z| the branch jump is O(e^{Re z}) next to O(1/|z|), below rounding.
  if (large(z)) return (1.0 + asymptotic_remainder(z)) / z;
  if (use_series(z)) return std::exp(z) * series(z);
  return continued_fraction_scaled(z);
}

cplx expint_e1_remainder(cplx z) {
  check(z);
  if (large(z)) return asymptotic_remainder(z);
  return z * expint_e1_scaled(z) - 1.0;
}

}  // namespace ifcrack::numerics
