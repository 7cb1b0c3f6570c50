#include "ifcrack/unperturbed.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ifcrack/error.hpp"
#include "ifcrack/quadrature.hpp"

namespace ifcrack {

using numerics::QuadResult;

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonzero(double xi) {
  if (xi == 0.0 || !std::isfinite(xi)) raise(ErrorKind::Domain, "xi must be finite and nonzero");
}

}  // namespace

UnperturbedSolution::UnperturbedSolution(const KernelFactors& kernel, const CrackLoad& load,
                                         const Bimaterial& material)
    : kernel_(&kernel), load_(&load), material_(material) {
  const auto params = derive_params(material, 1.0);
  if (std::abs(params.mu0 - kernel.mu0()) > 1e-12 * params.mu0) {
    raise(ErrorKind::Domain, "kernel mu0 does not match the material");
  }
  mu_star_ = params.mu_star;
}

double UnperturbedSolution::lambda_fn(double xi) const {
  require_nonzero(xi);
  return 0.5 * (1.0 - mu_star_ * kernel_->mu0() / std::abs(xi));
}

cplx UnperturbedSolution::g_term(std::size_t k, double beta) const {
  // On the real axis B- is the conjugate of B+.
  const cplx bp = kernel_->b_plus(beta);
  const auto p = load_->amplitude(k, beta);
  const double kappa = material_.kappa;
  return kappa * lambda_fn(beta) * p.jump / std::conj(bp) +
         kappa * kPi * kernel_->mu0() * bp * p.avg;
}

cplx UnperturbedSolution::g(double beta) const {
  cplx out = 0.0;
  for (std::size_t k = 0; k < load_->terms(); ++k) {
    const double x_k = load_->position(k);
    out += g_term(k, beta) * (x_k == 0.0 ? cplx(1.0) : std::polar(1.0, beta * x_k));
  }
  return out;
}

UnperturbedSolution::LPair UnperturbedSolution::l_pair(double xi) const {
  require_nonzero(xi);
  const auto& spec = kernel_->quadrature();
  const double scale = std::min(load_->length_scale(), 1.0 / kernel_->mu0());
  QuadResult<cplx> pv;
  for (std::size_t k = 0; k < load_->terms(); ++k) {
    const double x_k = load_->position(k);
    auto right = [&](double t) { return g_term(k, t); };
    auto left = [&](double t) { return g_term(k, -t); };
    pv += numerics::pv_cauchy_halfline(right, x_k, xi, spec, scale);
    auto mirrored = numerics::pv_cauchy_halfline(left, -x_k, -xi, spec, scale);
    pv.value -= mirrored.value;
    pv.error += mirrored.error;
  }
  const cplx cauchy = pv.value / cplx(0.0, 2.0 * kPi);
  const cplx half = 0.5 * g(xi);
  return {half + cauchy, -half + cauchy, pv.error / (2.0 * kPi)};
}

cplx UnperturbedSolution::L_pm_real(double xi, Side side) const {
  const auto l = l_pair(xi);
  return side == Side::Plus ? l.plus : l.minus;
}

UnperturbedSolution::LoadFunctions UnperturbedSolution::phi(double xi) const {
  const auto l = l_pair(xi);
  const cplx bp = kernel_->b_plus(xi);
  const cplx bm = std::conj(bp);
  const double kappa = material_.kappa;
  const cplx phi_plus = -l.plus / (kappa * kPi * kernel_->mu0() * bp);
  const cplx phi1 = l.minus * bm;
  return {phi_plus, phi1, phi1 + kappa * load_->transforms(xi).jump};
}

UnperturbedSolution::Coefficients UnperturbedSolution::a_coeffs(double xi) const {
  const auto f = phi(xi);
  const auto p = load_->transforms(xi);
  const double ax = std::abs(xi);
  return {-(f.phi_plus + p.avg + 0.5 * p.jump) / (material_.mu1 * ax),
          (f.phi_plus + p.avg - 0.5 * p.jump) / (material_.mu2 * ax)};
}

FieldSample UnperturbedSolution::grad_u0(Point Y, double min_angle) const {
  if (!(Y.y != 0.0) || !std::isfinite(Y.x) || !std::isfinite(Y.y)) {
    raise(ErrorKind::Geometry, "gradient point must lie off the interface line");
  }
  const double angle = std::abs(std::atan2(Y.y, Y.x));
  // A grid point exactly on the guard angle passes despite rounding in atan2.
  if (std::min(angle, kPi - angle) < min_angle * (1.0 - 1e-12)) {
    raise(ErrorKind::Geometry, "inclusion centre is closer to the interface line than the " +
                                   std::to_string(min_angle * 180.0 / kPi) +
                                   " degree guard angle");
  }
  const bool upper = Y.y > 0.0;
  const double depth = std::abs(Y.y);
  auto a_j = [&](double xi) {
    const auto a = a_coeffs(xi);
    return upper ? a.A1 : a.A2;
  };
  auto integrand = [&](double xi) -> cplx {
    return a_j(xi) * std::exp(cplx(-xi * depth, -xi * Y.x));
  };
  // Integrate xi A_j e^{...} once; gx and gy are its -i and -1 multiples.
  auto weighted = [&](double xi) -> cplx { return xi * integrand(xi); };
  numerics::TailOptions tail;
  tail.first_width = std::min({1.0 / depth, 1.0 / load_->length_scale(), kernel_->mu0()});
  tail.sqrt_at_start = true;
  const auto res = numerics::integrate_to_infinity(weighted, 0.0, kernel_->quadrature(), tail);
  const double sign = upper ? 1.0 : -1.0;
  FieldSample out;
  out.position = Y;
  out.u = std::numeric_limits<double>::quiet_NaN();
  out.gx = (cplx(0.0, -1.0) * res.value).real() / kPi;
  out.gy = sign * (-res.value).real() / kPi;
  out.est_error = res.error / kPi;
  return out;
}

double UnperturbedSolution::displacement(Point P) const {
  if (!(P.y != 0.0)) raise(ErrorKind::Geometry, "displacement point must lie off the interface");
  const bool upper = P.y > 0.0;
  const double depth = std::abs(P.y);
  auto integrand = [&](double xi) -> cplx {
    const auto a = a_coeffs(xi);
    const cplx aj = upper ? a.A1 : a.A2;
    return aj * (std::exp(cplx(-xi * depth, -xi * P.x)) - std::exp(-xi));
  };
  numerics::TailOptions tail;
  tail.first_width = std::min({1.0 / std::max(depth, 1e-3), 1.0 / load_->length_scale(),
                               kernel_->mu0()});
  tail.sqrt_at_start = true;
  const auto res = numerics::integrate_to_infinity(integrand, 0.0, kernel_->quadrature(), tail);
  return res.value.real() / kPi;
}

}  // namespace ifcrack
