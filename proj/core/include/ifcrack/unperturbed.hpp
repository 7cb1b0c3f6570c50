#pragma once

#include <complex>

#include "ifcrack/kernel.hpp"
#include "ifcrack/model.hpp"

namespace ifcrack {

enum class Side { Plus, Minus };

struct FieldSample {
  Point position;
  /// Displacement up to an additive constant; NaN when not computed.
  double u;
  double gx;
  double gy;
  double est_error;
};

/// Crack-face loaded problem without the inclusion, solved in transform
/// space. Holds references: kernel and load must outlive the solution.
class UnperturbedSolution {
 public:
  UnperturbedSolution(const KernelFactors& kernel, const CrackLoad& load,
                      const Bimaterial& material);

  const KernelFactors& kernel() const { return *kernel_; }
  const CrackLoad& load() const { return *load_; }
  const Bimaterial& material() const { return material_; }

  /// 1/2 (1 - mu* mu0 / |xi|).
  double lambda_fn(double xi) const;

  /// kappa Lambda [[p]] / B- + kappa pi mu0 B+ <p>, the function split by L+-.
  cplx g(double beta) const;

  struct LPair {
    cplx plus;
    cplx minus;
    double est_error;
  };
  /// Boundary values of L+ and L- on the real axis (Plemelj).
  LPair l_pair(double xi) const;
  cplx L_pm_real(double xi, Side side) const;

  struct LoadFunctions {
    cplx phi_plus;
    cplx phi1_minus;
    cplx phi2_minus;
  };
  LoadFunctions phi(double xi) const;

  struct Coefficients {
    cplx A1;
    cplx A2;
  };
  /// Transforms u_j(xi, y) = A_j(xi) e^{-|xi y|}.
  Coefficients a_coeffs(double xi) const;

  /// Gradient of u at Y, |Y_y| > 0 and at least `min_angle` (radians) away
  /// from the x-axis as seen from the crack tip.
  FieldSample grad_u0(Point Y, double min_angle = kDefaultMinAngle) const;

  /// u(x, y) - u(0, +-1) for y != 0 (the transform of u is not integrable at
  /// xi = 0, so only differences are defined).
  double displacement(Point P) const;

  static constexpr double kDefaultMinAngle = 5.0 * 3.14159265358979323846 / 180.0;

 private:
  cplx g_term(std::size_t k, double beta) const;

  const KernelFactors* kernel_;
  const CrackLoad* load_;
  Bimaterial material_;
  double mu_star_;
};

}  // namespace ifcrack
