#pragma once

#include <complex>
#include <vector>

#include "ifcrack/kernel.hpp"
#include "ifcrack/model.hpp"
#include "ifcrack/quadrature.hpp"

namespace ifcrack {

struct SpectralSample {
  double xi;
  cplx value;
};

/// Transforms of the weight function on the interface line, normalised so
/// that the constant in the Wiener-Hopf solution is 1.
class WeightTransforms {
 public:
  /// `kernel` must be built for the mu0 of `material` and outlive this object.
  WeightTransforms(const KernelFactors& kernel, const Bimaterial& material);

  const KernelFactors& kernel() const { return *kernel_; }
  const Bimaterial& material() const { return material_; }
  double mu_star() const { return mu_star_; }
  double normalization() const { return 1.0; }

  cplx phi_plus(double xi) const;
  cplx phi_minus(double xi) const;
  cplx jump_U(double xi) const;
  cplx avg_U(double xi) const;

  /// xi [[U]](xi) and kappa xi Phi-(xi), free of the removable 1/xi.
  cplx xi_jump_U(double xi) const;
  cplx kappa_xi_phi_minus(double xi) const;

 private:
  const KernelFactors* kernel_;
  Bimaterial material_;
  double mu_star_;
};

struct Sigma0Options {
  /// Number of log-spaced integrand samples to return (0 for none).
  int profile_points = 0;
};

struct Sigma0Result {
  double sigma0 = 0.0;
  double est_error = 0.0;
  /// Imaginary part of the full-line integral times the prefactor; zero for
  /// exact arithmetic.
  double imag_part = 0.0;
  std::vector<SpectralSample> integrand_profile;
};

/// sigma0 = 1/2 sqrt(mu0/pi) int xi ([[U]] <p> + <U> [[p]]) dxi.
Sigma0Result sigma0(const CrackLoad& load, const Bimaterial& material,
                    const numerics::QuadratureSpec& spec = {}, const Sigma0Options& opts = {});
Sigma0Result sigma0(const CrackLoad& load, const WeightTransforms& weights,
                    const Sigma0Options& opts = {});

/// Weight of [[p]] in the perfect-interface stress intensity factor.
double k3_jump_weight(double mu_star);

/// Mode III stress intensity factor of the same loading for a perfectly
/// bonded interface.
double k3_perfect(const CrackLoad& load, const Bimaterial& material,
                  const numerics::QuadratureSpec& spec = {});

struct RatioResult {
  double r;
  /// r sqrt(mu0_2 / mu0_1): r with the mu0 dependence of sigma0 divided out.
  double r_normalized;
  double sigma0_1;
  double sigma0_2;
  double k3_1;
  double k3_2;
};

/// Ratio of sigma0 ratios to perfect-interface K_III ratios for two materials
/// of the family mu1 + mu2 = 2 sharing kappa_star (reference length a).
RatioResult ratio_r(double kappa_star, double mu_star_1, double mu_star_2, const CrackLoad& load,
                    double a, const numerics::QuadratureSpec& spec = {});

}  // namespace ifcrack
