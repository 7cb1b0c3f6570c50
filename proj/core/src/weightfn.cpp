#include "ifcrack/weightfn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ifcrack/error.hpp"

namespace ifcrack {

using numerics::QuadratureSpec;
using numerics::QuadResult;

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonzero(double xi) {
  if (xi == 0.0 || !std::isfinite(xi)) raise(ErrorKind::Domain, "weight transforms need xi != 0");
}

void require_self_balance(const CrackLoad& load) {
  const auto t0 = load.transforms(0.0);
  if (std::abs(t0.jump) > 1e-12 * std::max(1.0, std::abs(t0.avg))) {
    raise(ErrorKind::SelfBalance,
          "load is not self-balanced: |[[p]](0)| = " + std::to_string(std::abs(t0.jump)));
  }
}

}  // namespace

WeightTransforms::WeightTransforms(const KernelFactors& kernel, const Bimaterial& material)
    : kernel_(&kernel), material_(material) {
  const auto params = derive_params(material, 1.0);
  if (std::abs(params.mu0 - kernel.mu0()) > 1e-12 * params.mu0) {
    raise(ErrorKind::Domain, "kernel mu0 does not match the material");
  }
  mu_star_ = params.mu_star;
}

cplx WeightTransforms::xi_jump_U(double xi) const {
  require_nonzero(xi);
  return 1.0 / (kPi * kernel_->xi_star_minus(xi) * kernel_->xi0_minus(xi) * xi_plus_half(xi));
}

cplx WeightTransforms::kappa_xi_phi_minus(double xi) const {
  require_nonzero(xi);
  return -xi_minus_half(xi) /
         (kPi * kernel_->mu0() * kernel_->xi_star_minus(xi) * kernel_->xi0_minus(xi));
}

cplx WeightTransforms::phi_minus(double xi) const {
  return kappa_xi_phi_minus(xi) / (material_.kappa * xi);
}

cplx WeightTransforms::phi_plus(double xi) const {
  require_nonzero(xi);
  return kernel_->xi0_plus(xi) * kernel_->xi_star_plus(xi) / (xi * xi_plus_half(xi));
}

cplx WeightTransforms::jump_U(double xi) const { return xi_jump_U(xi) / xi; }

cplx WeightTransforms::avg_U(double xi) const { return -0.5 * mu_star_ * jump_U(xi); }

Sigma0Result sigma0(const CrackLoad& load, const Bimaterial& material, const QuadratureSpec& spec,
                    const Sigma0Options& opts) {
  const auto params = derive_params(material, 1.0);
  const KernelFactors kernel(params.mu0, spec);
  const WeightTransforms weights(kernel, material);
  return sigma0(load, weights, opts);
}

Sigma0Result sigma0(const CrackLoad& load, const WeightTransforms& weights,
                    const Sigma0Options& opts) {
  require_self_balance(load);
  const QuadratureSpec& spec = weights.kernel().quadrature();
  const double mu0 = weights.kernel().mu0();
  const double half_mu = 0.5 * weights.mu_star();
  const double scale = load.length_scale();

  numerics::OscillatoryOptions osc;
  osc.sqrt_at_start = true;
  osc.first_width = std::min(mu0, 1.0 / scale);
  osc.x_max = spec.truncation_or(1e12 * std::max(mu0, 1.0 / scale));

  QuadResult<cplx> total;
  for (std::size_t k = 0; k < load.terms(); ++k) {
    const double x_k = load.position(k);
    for (double side : {1.0, -1.0}) {
      auto amplitude = [&](double t) {
        const double xi = side * t;
        const auto p = load.amplitude(k, xi);
        return weights.xi_jump_U(xi) * (p.avg - half_mu * p.jump);
      };
      total += numerics::integrate_oscillatory(amplitude, side * x_k, 0.0, spec, osc);
    }
  }

  const double prefactor = 0.5 * std::sqrt(mu0 / kPi);
  Sigma0Result out;
  out.sigma0 = prefactor * total.value.real();
  out.imag_part = prefactor * total.value.imag();
  out.est_error = prefactor * total.error;

  if (opts.profile_points > 1) {
    const double lo = std::log(1e-3 * mu0);
    const double hi = std::log(1e3 * mu0);
    for (int i = 0; i < opts.profile_points; ++i) {
      const double xi = std::exp(lo + (hi - lo) * i / (opts.profile_points - 1));
      const auto p = load.transforms(xi);
      out.integrand_profile.push_back(
          {xi, prefactor * weights.xi_jump_U(xi) * (p.avg - half_mu * p.jump)});
    }
  }
  return out;
}

double k3_jump_weight(double mu_star) { return -mu_star; }

double k3_perfect(const CrackLoad& load, const Bimaterial& material, const QuadratureSpec& spec) {
  const double c = k3_jump_weight(derive_params(material, 1.0).mu_star);
  const double pref = -std::sqrt(2.0 / kPi);
  if (load.kind() == LoadKind::PointTriple) {
    const double F = load.F(), a = load.a(), b = load.b();
    const double pair = 1.0 / std::sqrt(a + b) + 1.0 / std::sqrt(a - b);
    const double avg = 0.5 * F / std::sqrt(a) + 0.25 * F * pair;
    const double jump = F / std::sqrt(a) - 0.5 * F * pair;
    return pref * (avg + 0.5 * c * jump);
  }
  if (!load.tractions(-1.0)) {
    raise(ErrorKind::UnsupportedLoad,
          "perfect-interface factor needs x-domain tractions for this load");
  }
  auto integrand = [&](double r) {
    const auto p = *load.tractions(-r);
    return (p.avg.real() + 0.5 * c * p.jump.real()) / std::sqrt(r);
  };
  numerics::TailOptions tail;
  tail.first_width = load.length_scale();
  tail.sqrt_at_start = true;
  return pref * numerics::integrate_to_infinity(integrand, 0.0, spec, tail).value;
}

RatioResult ratio_r(double kappa_star, double mu_star_1, double mu_star_2, const CrackLoad& load,
                    double a, const QuadratureSpec& spec) {
  const Bimaterial m1 = material_from_dimensionless(mu_star_1, kappa_star, a);
  const Bimaterial m2 = material_from_dimensionless(mu_star_2, kappa_star, a);
  RatioResult out{};
  out.sigma0_1 = sigma0(load, m1, spec).sigma0;
  out.sigma0_2 = sigma0(load, m2, spec).sigma0;
  out.k3_1 = k3_perfect(load, m1, spec);
  out.k3_2 = k3_perfect(load, m2, spec);
  if (out.sigma0_2 == 0.0 || out.k3_1 == 0.0 || out.k3_2 == 0.0) {
    raise(ErrorKind::DivisionByZero, "ratio r has a vanishing denominator");
  }
  out.r = (out.sigma0_1 / out.sigma0_2) / (out.k3_1 / out.k3_2);
  const double mu0_1 = derive_params(m1, a).mu0;
  const double mu0_2 = derive_params(m2, a).mu0;
  out.r_normalized = out.r * std::sqrt(mu0_2 / mu0_1);
  return out;
}

}  // namespace ifcrack
