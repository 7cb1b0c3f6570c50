#pragma once

#include <complex>

#include "ifcrack/quadrature.hpp"

namespace ifcrack {

using cplx = std::complex<double>;

/// How the phase of the real-axis factor Xi*+ is obtained.
enum class CacheMode {
  /// Piecewise Chebyshev table of the dimensionless phase, built once per
  /// process and shared by every kernel.
  Table,
  /// Principal-value quadrature at every call.
  Direct,
};

/// Factorisation Xi(xi) = 1 + mu0/|xi| = pi mu0 B+(xi) B-(xi) with
///   B+ = Xi0+ Xi*+ / xi_+^{1/2},   B- = Xi0- Xi*- / xi_-^{1/2},
/// xi_+^{1/2} = sqrt(-i xi), xi_-^{1/2} = sqrt(i xi). Immutable; safe to share.
class KernelFactors {
 public:
  explicit KernelFactors(double mu0, numerics::QuadratureSpec spec = {},
                         CacheMode mode = CacheMode::Table);

  double mu0() const { return mu0_; }
  CacheMode mode() const { return mode_; }
  const numerics::QuadratureSpec& quadrature() const { return spec_; }

  double xi(double xi) const;
  /// tanh(|xi|/mu0) (1 + mu0/|xi|).
  double xi_star(double xi) const;

  /// Gamma(1 - i z/(pi mu0)) / Gamma(1/2 - i z/(pi mu0)), Im z > -pi mu0/2.
  cplx xi0_plus(cplx z) const;
  /// xi0_plus(-z), Im z < pi mu0/2.
  cplx xi0_minus(cplx z) const;

  /// Boundary value of Xi*+ on the real axis.
  cplx xi_star_plus(double xi) const;
  cplx xi_star_minus(double xi) const;

  cplx b_plus(double xi) const;
  cplx b_minus(double xi) const;

  /// |pi mu0 B+ B- / Xi - 1|.
  double factorization_residual(double xi) const;

  /// ln Xi* for mu0 = 1 as a function of x = |xi|/mu0 >= 0.
  static double log_xi_star_unit(double x);
  /// x J(x) / pi with J(x) = PV int_0^inf ln Xi*(t)/(t^2 - x^2) dt at mu0 = 1.
  double phase(double x) const;
  static double phase_direct(double x, const numerics::QuadratureSpec& spec);

 private:
  void require_nonzero(double xi, const char* what) const;

  double mu0_;
  numerics::QuadratureSpec spec_;
  CacheMode mode_;
};

/// sqrt(-i xi) and sqrt(i xi) on the real axis.
cplx xi_plus_half(double xi);
cplx xi_minus_half(double xi);

}  // namespace ifcrack
