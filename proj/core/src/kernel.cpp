#include "ifcrack/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ifcrack/error.hpp"
#include "ifcrack/log_gamma.hpp"

namespace ifcrack {

namespace {

using numerics::QuadratureSpec;

constexpr double kTanhClamp = 30.0;

// Chebyshev pieces in log10(x) over [10^kLowExp, 10^kHighExp].
constexpr int kLowExp = -12;
constexpr int kHighExp = 12;
constexpr int kPiecesPerDecade = 4;
constexpr int kNodes = 16;

class PhaseTable {
 public:
  PhaseTable() {
    QuadratureSpec spec;
    spec.rel_tol = 1e-13;
    spec.abs_tol = 1e-15;
    spec.max_subdivisions = 4000;
    const int pieces = (kHighExp - kLowExp) * kPiecesPerDecade;
    coeffs_.resize(static_cast<std::size_t>(pieces));
    std::array<double, kNodes> values{};
    for (int p = 0; p < pieces; ++p) {
      const double lo = kLowExp + static_cast<double>(p) / kPiecesPerDecade;
      const double mid = lo + 0.5 / kPiecesPerDecade;
      const double half = 0.5 / kPiecesPerDecade;
      for (int j = 0; j < kNodes; ++j) {
        const double t = std::cos(std::numbers::pi * (j + 0.5) / kNodes);
        values[j] = KernelFactors::phase_direct(std::pow(10.0, mid + half * t), spec);
      }
      auto& c = coeffs_[static_cast<std::size_t>(p)];
      for (int k = 0; k < kNodes; ++k) {
        double s = 0.0;
        for (int j = 0; j < kNodes; ++j) s += values[j] * std::cos(std::numbers::pi * k * (j + 0.5) / kNodes);
        c[k] = 2.0 * s / kNodes;
      }
      c[0] *= 0.5;
    }
  }

  static bool covers(double x) {
    return x >= std::pow(10.0, kLowExp) && x < std::pow(10.0, kHighExp);
  }

  double operator()(double x) const {
    const double u = std::log10(x);
    int p = static_cast<int>(std::floor((u - kLowExp) * kPiecesPerDecade));
    p = std::clamp(p, 0, static_cast<int>(coeffs_.size()) - 1);
    const double mid = kLowExp + (p + 0.5) / kPiecesPerDecade;
    const double t = (u - mid) * 2.0 * kPiecesPerDecade;
    const auto& c = coeffs_[static_cast<std::size_t>(p)];
    double b1 = 0.0, b2 = 0.0;
    for (int k = kNodes - 1; k >= 1; --k) {
      const double b0 = 2.0 * t * b1 - b2 + c[k];
      b2 = b1;
      b1 = b0;
    }
    return t * b1 - b2 + c[0];
  }

 private:
  std::vector<std::array<double, kNodes>> coeffs_;
};

const PhaseTable& phase_table() {
  static const PhaseTable table;
  return table;
}

}  // namespace

cplx xi_plus_half(double xi) { return std::sqrt(cplx(0.0, -xi)); }
cplx xi_minus_half(double xi) { return std::sqrt(cplx(0.0, xi)); }

KernelFactors::KernelFactors(double mu0, QuadratureSpec spec, CacheMode mode)
    : mu0_(mu0), spec_(spec), mode_(mode) {
  if (!(mu0 > 0.0) || !std::isfinite(mu0)) raise(ErrorKind::Domain, "mu0 must be positive");
  spec_.validate();
  if (mode_ == CacheMode::Table) phase_table();
}

void KernelFactors::require_nonzero(double xi, const char* what) const {
  if (xi == 0.0 || !std::isfinite(xi)) {
    raise(ErrorKind::Domain, std::string(what) + " needs a finite nonzero xi");
  }
}

double KernelFactors::xi(double x) const {
  require_nonzero(x, "Xi");
  return 1.0 + mu0_ / std::abs(x);
}

double KernelFactors::xi_star(double x) const {
  require_nonzero(x, "Xi*");
  const double t = std::abs(x) / mu0_;
  if (t > kTanhClamp) return 1.0 + 1.0 / t;
  return std::tanh(t) / t * (1.0 + t);
}

double KernelFactors::log_xi_star_unit(double x) {
  if (x == 0.0) return 0.0;
  if (x > kTanhClamp) return std::log1p(1.0 / x);
  if (x > 1.0) return std::log(std::tanh(x)) + std::log1p(1.0 / x);
  return std::log(std::tanh(x) / x) + std::log1p(x);
}

double KernelFactors::phase_direct(double x, const QuadratureSpec& spec) {
  if (!(x > 0.0)) raise(ErrorKind::Domain, "phase needs x > 0");
  QuadratureSpec local = spec;
  // Absolute accuracy of the phase, not of J.
  local.abs_tol = spec.abs_tol * std::numbers::pi / x;
  const double j = numerics::pv_integral_even_logkernel(&KernelFactors::log_xi_star_unit, x, local);
  return x * j / std::numbers::pi;
}

double KernelFactors::phase(double x) const {
  if (mode_ == CacheMode::Table && PhaseTable::covers(x)) return phase_table()(x);
  return phase_direct(x, spec_);
}

cplx KernelFactors::xi0_plus(cplx z) const {
  const cplx w = cplx(0.0, -1.0) * z / (std::numbers::pi * mu0_);
  if (!(w.real() > -0.5)) {
    raise(ErrorKind::Domain, "Xi0+ is evaluated below its half-plane Im z > -pi mu0/2");
  }
  return std::exp(numerics::log_gamma_half_ratio(0.5 + w));
}

cplx KernelFactors::xi0_minus(cplx z) const { return xi0_plus(-z); }

cplx KernelFactors::xi_star_plus(double x) const {
  require_nonzero(x, "Xi*+");
  const double theta = phase(std::abs(x) / mu0_);
  return std::sqrt(xi_star(x)) * std::polar(1.0, x > 0.0 ? -theta : theta);
}

cplx KernelFactors::xi_star_minus(double x) const { return std::conj(xi_star_plus(x)); }

cplx KernelFactors::b_plus(double x) const {
  return xi0_plus(x) * xi_star_plus(x) / xi_plus_half(x);
}

cplx KernelFactors::b_minus(double x) const {
  return xi0_minus(x) * xi_star_minus(x) / xi_minus_half(x);
}

double KernelFactors::factorization_residual(double x) const {
  return std::abs(std::numbers::pi * mu0_ * b_plus(x) * b_minus(x) / xi(x) - 1.0);
}

}  // namespace ifcrack
