#include "ifcrack/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "ifcrack/error.hpp"
#include "ifcrack/expint.hpp"

namespace ifcrack {

using numerics::QuadratureSpec;

namespace {

constexpr double kPi = std::numbers::pi;

// Transforms of h(x) = 1/(x - c)^2 over x < 0 and x > 0 at xi >= 0, Im c != 0.
// Integrating by parts, the x < 0 part is 1/c + i xi F with
// F = int_{-inf}^0 e^{i xi x}/(x - c) dx = -e^{i xi c} E1(i xi c), continued
// analytically off the lower half-plane, which adds a pole term when c lies
// in the second quadrant. With s = i xi c the two leading terms cancel, so
// the x < 0 part is written as -(s e^s E1(s) - 1)/c. The full-line transform
// is a residue for Im c > 0.
std::pair<cplx, cplx> halfline_transforms_inverse_square(cplx c, double xi) {
  if (xi == 0.0) return {1.0 / c, -1.0 / c};
  const cplx s = cplx(0.0, xi) * c;
  cplx minus = -numerics::expint_e1_remainder(s) / c;
  if (c.imag() > 0.0 && c.real() < 0.0) minus -= 2.0 * kPi * xi * std::exp(s);
  const cplx full = c.imag() > 0.0 ? -2.0 * kPi * xi * std::exp(s) : cplx(0.0);
  return {minus, full - minus};
}

double profile(int j, double x, Point Y) {
  const double dx = x - Y.x;
  const double r2 = dx * dx + Y.y * Y.y;
  if (j == 0) return -dx * Y.y / (kPi * r2 * r2);
  return (Y.y * Y.y - dx * dx) / (2.0 * kPi * r2 * r2);
}

void check_dipole_input(double ell_a, double ell_b) {
  if (!(ell_b > 0.0) || !(ell_a >= ell_b) || !std::isfinite(ell_a)) {
    raise(ErrorKind::Domain, "dipole needs semi-axes ell_a >= ell_b > 0");
  }
}

}  // namespace

Vec2 DipoleMatrix::eigenvalues() const {
  const double mean = 0.5 * (m11 + m22);
  const double radius = std::hypot(0.5 * (m11 - m22), m12);
  return {mean - radius, mean + radius};
}

DipoleMatrix dipole_elliptic(double ell_a, double ell_b, double alpha, double nu_star) {
  check_dipole_input(ell_a, ell_b);
  if (!(nu_star > 0.0) || !std::isfinite(nu_star)) raise(ErrorKind::Domain, "nu_star must be positive");
  const double e = ell_b / ell_a;
  const double c = std::cos(2.0 * alpha);
  const double s = std::sin(2.0 * alpha);
  const double p = e + nu_star;
  const double q = 1.0 + e * nu_star;
  const double b11 = (1.0 + c) / p + (1.0 - c) / q;
  const double b12 = -(1.0 - e) * (nu_star - 1.0) * s / (p * q);
  const double b22 = (1.0 - c) / p + (1.0 + c) / q;
  const double pre = -0.5 * kPi * ell_a * ell_b * (1.0 + e) * (nu_star - 1.0);
  return {pre * b11, pre * b12, pre * b22};
}

DipoleMatrix dipole_rigid(double ell_a, double ell_b, double alpha) {
  check_dipole_input(ell_a, ell_b);
  const double e = ell_b / ell_a;
  const double hp = 1.0 + std::cos(2.0 * alpha);
  const double hm = 1.0 - std::cos(2.0 * alpha);
  const double s = std::sin(2.0 * alpha);
  const double pre = 0.5 * kPi * ell_a * ell_b * (1.0 / e + 1.0);
  return {pre * (hp + e * hm), pre * (1.0 - e) * s, pre * (hm + e * hp)};
}

DipoleMatrix scaled_dipole(const InclusionSpec& inc) {
  inc.validate();
  const double a = inc.d;
  const double b = inc.d * inc.aspect();
  return inc.rigid ? dipole_rigid(a, b, inc.alpha) : dipole_elliptic(a, b, inc.alpha, inc.nu_star);
}

double boundary_layer_dy(double x, const Vec2& G, const DipoleMatrix& M, Point Y) {
  if (x == Y.x && Y.y == 0.0) raise(ErrorKind::Geometry, "evaluation point coincides with Y");
  const Vec2 q = M.apply(G);
  return q[0] * profile(0, x, Y) + q[1] * profile(1, x, Y);
}

ProfileTransforms boundary_layer_transforms(Point Y, double xi) {
  if (Y.y == 0.0) raise(ErrorKind::Geometry, "boundary layer source must lie off the interface");
  if (!std::isfinite(xi)) raise(ErrorKind::Domain, "transform variable must be finite");
  // v1 = (h - conj h)/(4 pi i), v2 = -(h + conj h)/(4 pi) with h = 1/(x - c)^2,
  // c = X - i Y_y; conj h is the same profile with c replaced by conj(c).
  const cplx c(Y.x, -Y.y);
  const auto [hm, hp] = halfline_transforms_inverse_square(c, std::abs(xi));
  const auto [hm_bar, hp_bar] = halfline_transforms_inverse_square(std::conj(c), std::abs(xi));
  const cplx i4pi(0.0, 4.0 * kPi);
  ProfileTransforms out{{(hm - hm_bar) / i4pi, -(hm + hm_bar) / (4.0 * kPi)},
                        {(hp - hp_bar) / i4pi, -(hp + hp_bar) / (4.0 * kPi)}};
  if (xi < 0.0) {
    // Real profiles: the transform at -xi is the conjugate.
    for (auto* side : {out.minus, out.plus}) {
      side[0] = std::conj(side[0]);
      side[1] = std::conj(side[1]);
    }
  }
  return out;
}

EffectiveTractionTransforms effective_traction_transforms(const Vec2& G, const DipoleMatrix& M,
                                                          Point Y, const Bimaterial& material,
                                                          double xi) {
  material.validate();
  const auto t = boundary_layer_transforms(Y, xi);
  const Vec2 q = M.apply(G);
  const cplx w_minus = q[0] * t.minus[0] + q[1] * t.minus[1];
  const cplx w_plus = q[0] * t.plus[0] + q[1] * t.plus[1];
  const double p_coef = -0.5 * (material.mu1 + material.mu2);
  const double q_coef = -(material.mu1 - material.mu2);
  return {p_coef * w_minus, q_coef * w_minus, p_coef * w_plus, q_coef * w_plus};
}

std::string to_string(Effect e) {
  switch (e) {
    case Effect::Shielding: return "shielding";
    case Effect::Neutral: return "neutral";
    case Effect::Amplifying: return "amplifying";
  }
  return "neutral";
}

Effect classify(double delta_sigma0, double est_error) {
  if (std::abs(delta_sigma0) <= est_error) return Effect::Neutral;
  return delta_sigma0 > 0.0 ? Effect::Amplifying : Effect::Shielding;
}

PerturbationSolver::PerturbationSolver(const CrackLoad& load, const Bimaterial& material,
                                       const QuadratureSpec& spec, CacheMode mode)
    : load_(load), material_(material), spec_(spec) {
  const auto params = derive_params(material, 1.0);
  kernel_ = std::make_unique<KernelFactors>(params.mu0, spec, mode);
  weights_ = std::make_unique<WeightTransforms>(*kernel_, material_);
  unperturbed_ = std::make_unique<UnperturbedSolution>(*kernel_, load_, material_);
  sigma0_ = ifcrack::sigma0(load_, *weights_);
}

double PerturbationSolver::prefactor() const {
  // -1/2 sqrt(mu0/pi) times P = -(mu1 + mu2)/2 dw/dy.
  return 0.25 * (material_.mu1 + material_.mu2) * std::sqrt(kernel_->mu0() / kPi);
}

PerturbationSolver::Basis PerturbationSolver::betti_basis(Point Y) const {
  if (Y.y == 0.0) raise(ErrorKind::Geometry, "inclusion centre must lie off the interface");
  const double ms2 = weights_->mu_star() * weights_->mu_star();
  const double d = std::hypot(Y.x, Y.y);
  numerics::TailOptions tail;
  tail.sqrt_at_start = true;
  tail.first_width = std::min(kernel_->mu0(), 1.0 / d);
  tail.x_max = spec_.truncation_or(1e16 * std::max(kernel_->mu0(), 1.0 / d));
  Basis out{};
  for (int j = 0; j < 2; ++j) {
    auto integrand = [&](double xi) {
      const auto t = boundary_layer_transforms(Y, xi);
      const cplx s = weights_->xi_jump_U(xi);
      const cplx k_phi = weights_->kappa_xi_phi_minus(xi);
      return 2.0 * ((1.0 - ms2) * s * t.minus[j] + (k_phi - ms2 * s) * t.plus[j]).real();
    };
    const auto r = numerics::integrate_to_infinity(integrand, 0.0, spec_, tail);
    out.D[j] = r.value;
    out.error[j] = r.error;
  }
  return out;
}

PerturbationResult PerturbationSolver::combine(const DipoleMatrix& M, double epsilon,
                                               const FieldSample& grad, const Basis& basis) const {
  const Vec2 G{grad.gx, grad.gy};
  const Vec2 q = M.apply(G);
  const Vec2 md = M.apply(basis.D);
  const double pre = prefactor();
  PerturbationResult out;
  out.delta_sigma0 = pre * (q[0] * basis.D[0] + q[1] * basis.D[1]);
  out.est_error = pre * (std::abs(q[0]) * basis.error[0] + std::abs(q[1]) * basis.error[1] +
                         std::hypot(md[0], md[1]) * grad.est_error);
  out.sign = classify(out.delta_sigma0, out.est_error);
  out.sigma0 = sigma0_.sigma0;
  out.epsilon = epsilon;
  out.sigma0_perturbed = out.sigma0 - epsilon * epsilon * out.delta_sigma0;
  out.grad = G;
  out.dipole = M;
  return out;
}

PerturbationResult PerturbationSolver::evaluate(const InclusionSpec& inc, double min_angle) const {
  const DipoleMatrix M = scaled_dipole(inc);
  const Point Y = inclusion_centre(inc);
  const FieldSample grad = unperturbed_->grad_u0(Y, min_angle);
  return combine(M, inc.epsilon(), grad, betti_basis(Y));
}

PerturbationResult delta_sigma0(const CrackLoad& load, const Bimaterial& material,
                                const InclusionSpec& inc, const QuadratureSpec& spec,
                                double min_angle) {
  inc.validate();
  const PerturbationSolver solver(load, material, spec);
  return solver.evaluate(inc, min_angle);
}

SignMap sign_map(const CrackLoad& load, const Bimaterial& material, const InclusionSpec& base,
                 const std::vector<double>& phi_grid, const std::vector<double>& alpha_grid,
                 const QuadratureSpec& spec, double min_angle) {
  base.validate();
  const PerturbationSolver solver(load, material, spec);
  SignMap map;
  map.phi = phi_grid;
  map.alpha = alpha_grid;
  map.cells.reserve(phi_grid.size() * alpha_grid.size());
  for (double phi : phi_grid) {
    InclusionSpec inc = base;
    inc.phi = phi;
    inc.validate();
    const Point Y = inclusion_centre(inc);
    const FieldSample grad = solver.unperturbed().grad_u0(Y, min_angle);
    const auto basis = solver.betti_basis(Y);
    for (double alpha : alpha_grid) {
      inc.alpha = alpha;
      map.cells.push_back(solver.combine(scaled_dipole(inc), inc.epsilon(), grad, basis));
    }
  }
  return map;
}

}  // namespace ifcrack
