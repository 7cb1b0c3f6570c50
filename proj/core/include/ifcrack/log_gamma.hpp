#pragma once

#include <complex>

namespace ifcrack::numerics {

/// Principal branch of ln Gamma(z). Stirling series after upward recurrence.
/// Throws ErrorKind::Pole at z = 0, -1, -2, ...
std::complex<double> log_gamma(std::complex<double> z);

/// ln Gamma(z + 1/2) - ln Gamma(z) for Re z > 0, without the cancellation of
/// the plain difference at large |z|.
std::complex<double> log_gamma_half_ratio(std::complex<double> z);

}  // namespace ifcrack::numerics
