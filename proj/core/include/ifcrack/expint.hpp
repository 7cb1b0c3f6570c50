#pragma once

#include <complex>

namespace ifcrack::numerics {

/// Exponential integral E1(z) = int_z^inf e^{-t}/t dt, principal branch with
/// the cut on the negative real axis; on the cut the value is the limit from
/// Im z > 0. Throws ErrorKind::Pole at z = 0.
std::complex<double> expint_e1(std::complex<double> z);

/// e^z E1(z), finite for large |z| in every direction.
std::complex<double> expint_e1_scaled(std::complex<double> z);

/// z e^z E1(z) - 1, which is O(1/|z|) for large |z|; computed without the
/// cancellation of the plain difference.
std::complex<double> expint_e1_remainder(std::complex<double> z);

}  // namespace ifcrack::numerics
