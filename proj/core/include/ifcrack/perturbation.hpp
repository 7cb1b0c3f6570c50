#pragma once

#include <array>
#include <complex>
#include <memory>
#include <vector>

#include "ifcrack/kernel.hpp"
#include "ifcrack/model.hpp"
#include "ifcrack/quadrature.hpp"
#include "ifcrack/unperturbed.hpp"
#include "ifcrack/weightfn.hpp"

namespace ifcrack {

using Vec2 = std::array<double, 2>;

/// Symmetric 2x2 dipole matrix (units of length^2).
struct DipoleMatrix {
  double m11 = 0.0;
  double m12 = 0.0;
  double m22 = 0.0;

  Vec2 apply(const Vec2& v) const { return {m11 * v[0] + m12 * v[1], m12 * v[0] + m22 * v[1]}; }
  /// Ascending eigenvalues.
  Vec2 eigenvalues() const;
  DipoleMatrix scaled(double s) const { return {s * m11, s * m12, s * m22}; }
};

/// Elastic elliptic inclusion, semi-axes ell_a >= ell_b, major axis at angle
/// alpha to the x-axis, nu_star = mu_out / mu_in.
DipoleMatrix dipole_elliptic(double ell_a, double ell_b, double alpha, double nu_star);
/// Rigid movable elliptic inclusion.
DipoleMatrix dipole_rigid(double ell_a, double ell_b, double alpha);

/// Dipole of the inclusion magnified by 1/epsilon (semi-axes d and e d), the
/// normalisation in which Delta sigma0 does not depend on epsilon.
DipoleMatrix scaled_dipole(const InclusionSpec& inc);

/// d w / d y on the line y = 0 for the far field of a dipole at Y driven by
/// the gradient G.
double boundary_layer_dy(double x, const Vec2& G, const DipoleMatrix& M, Point Y);

/// Half-line transforms of the two unit boundary-layer profiles
///   v1 = -(x - X) Y / (pi r^4),   v2 = (Y^2 - (x - X)^2) / (2 pi r^4),
/// so that d w / d y = (M G) . (v1, v2). Closed form through the exponential
/// integral E1.
struct ProfileTransforms {
  cplx minus[2];
  cplx plus[2];
};
ProfileTransforms boundary_layer_transforms(Point Y, double xi);

struct EffectiveTractionTransforms {
  cplx P_minus;
  cplx Q_minus;
  cplx P_plus;
  cplx Q_plus;
};
EffectiveTractionTransforms effective_traction_transforms(const Vec2& G, const DipoleMatrix& M,
                                                          Point Y, const Bimaterial& material,
                                                          double xi);

enum class Effect { Shielding, Neutral, Amplifying };
std::string to_string(Effect e);

struct PerturbationResult {
  double delta_sigma0 = 0.0;
  double est_error = 0.0;
  Effect sign = Effect::Neutral;
  double sigma0 = 0.0;
  /// sigma0 - epsilon^2 Delta sigma0: the perturbed constant in the
  /// normalisation of sigma0(), whose sign is opposite to the tip traction.
  double sigma0_perturbed = 0.0;
  double epsilon = 0.0;
  Vec2 grad{};
  DipoleMatrix dipole{};
};

Effect classify(double delta_sigma0, double est_error);

/// Everything that depends only on load and material, shared between
/// inclusion positions and orientations.
class PerturbationSolver {
 public:
  PerturbationSolver(const CrackLoad& load, const Bimaterial& material,
                     const numerics::QuadratureSpec& spec = {},
                     CacheMode mode = CacheMode::Table);
  PerturbationSolver(const PerturbationSolver&) = delete;
  PerturbationSolver& operator=(const PerturbationSolver&) = delete;

  const Bimaterial& material() const { return material_; }
  double sigma0() const { return sigma0_.sigma0; }
  const KernelFactors& kernel() const { return *kernel_; }
  const WeightTransforms& weights() const { return *weights_; }
  const UnperturbedSolution& unperturbed() const { return *unperturbed_; }

  /// Betti integrals of the unit profiles v1, v2 at Y, with error estimates:
  /// Delta sigma0 = prefactor() (M G) . D.
  struct Basis {
    Vec2 D;
    Vec2 error;
  };
  Basis betti_basis(Point Y) const;
  double prefactor() const;

  PerturbationResult evaluate(const InclusionSpec& inc,
                              double min_angle = UnperturbedSolution::kDefaultMinAngle) const;

  /// Combination step shared by evaluate() and sign maps.
  PerturbationResult combine(const DipoleMatrix& M, double epsilon, const FieldSample& grad,
                             const Basis& basis) const;

 private:
  CrackLoad load_;
  Bimaterial material_;
  numerics::QuadratureSpec spec_;
  std::unique_ptr<KernelFactors> kernel_;
  std::unique_ptr<WeightTransforms> weights_;
  std::unique_ptr<UnperturbedSolution> unperturbed_;
  Sigma0Result sigma0_;
};

PerturbationResult delta_sigma0(const CrackLoad& load, const Bimaterial& material,
                                const InclusionSpec& inc,
                                const numerics::QuadratureSpec& spec = {},
                                double min_angle = UnperturbedSolution::kDefaultMinAngle);

struct SignMap {
  std::vector<double> phi;
  std::vector<double> alpha;
  /// Row-major: cells[i * alpha.size() + j] is (phi[i], alpha[j]).
  std::vector<PerturbationResult> cells;
};

/// Delta sigma0 over a (phi, alpha) grid for the inclusion `base` (its d,
/// semi-axes and contrast are kept; phi and alpha are overwritten).
SignMap sign_map(const CrackLoad& load, const Bimaterial& material, const InclusionSpec& base,
                 const std::vector<double>& phi_grid, const std::vector<double>& alpha_grid,
                 const numerics::QuadratureSpec& spec = {},
                 double min_angle = UnperturbedSolution::kDefaultMinAngle);

}  // namespace ifcrack
