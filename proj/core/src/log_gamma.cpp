#include "ifcrack/log_gamma.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ifcrack/error.hpp"

namespace ifcrack::numerics {

using cplx = std::complex<double>;

namespace {

// B_{2k} / (2k (2k - 1)) for k = 1..10.
constexpr double kStirling[10] = {
    1.0 / 12.0,           -1.0 / 360.0,        1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0,   1.0 / 156.0,         -3617.0 / 122400.0,
    43867.0 / 244188.0,   -174611.0 / 125400.0};

constexpr double kShiftRadius = 15.0;

}  // namespace

cplx log_gamma(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    raise(ErrorKind::Domain, "log_gamma argument is not finite");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    raise(ErrorKind::Pole, "log_gamma pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < -1e5) raise(ErrorKind::Domain, "log_gamma argument too far left");

  cplx shift = 0.0;
  while (z.real() < 0.5 || std::abs(z) < kShiftRadius) {
    shift += std::log(z);
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_2pi + series - shift;
}

cplx log_gamma_half_ratio(cplx z) {
  if (!(z.real() > 0.0)) raise(ErrorKind::Domain, "half ratio needs Re z > 0");
  cplx shift = 0.0;
  while (std::abs(z) < kShiftRadius) {
    shift += std::log(z) - std::log(z + 0.5);
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  const cplx series =
      inv * (-1.0 / 8.0 +
             inv2 * (1.0 / 192.0 +
                     inv2 * (-1.0 / 640.0 + inv2 * (17.0 / 14336.0 + inv2 * (-31.0 / 18432.0)))));
  return 0.5 * std::log(z) + series + shift;
}

}  // namespace ifcrack::numerics
