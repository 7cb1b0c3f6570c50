#include "ifcrack/model.hpp"

#include <cmath>
#include <numbers>

#include "ifcrack/error.hpp"

namespace ifcrack {

namespace {

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void Bimaterial::validate() const {
  if (!positive(mu1)) raise(ErrorKind::Domain, "mu1 must be positive");
  if (!positive(mu2)) raise(ErrorKind::Domain, "mu2 must be positive");
  if (!positive(kappa)) raise(ErrorKind::Domain, "kappa must be positive");
}

DerivedParams derive_params(const Bimaterial& m, double a) {
  m.validate();
  if (!positive(a)) raise(ErrorKind::Domain, "reference length a must be positive");
  const double sum = m.mu1 + m.mu2;
  return {sum / (m.mu1 * m.mu2 * m.kappa), (m.mu1 - m.mu2) / sum, m.kappa * sum / a};
}

Bimaterial material_from_dimensionless(double mu_star, double kappa_star, double a) {
  if (!(mu_star > -1.0 && mu_star < 1.0)) raise(ErrorKind::Domain, "mu_star must lie in (-1, 1)");
  if (!positive(kappa_star)) raise(ErrorKind::Domain, "kappa_star must be positive");
  if (!positive(a)) raise(ErrorKind::Domain, "reference length a must be positive");
  return {1.0 + mu_star, 1.0 - mu_star, kappa_star * a / 2.0};
}

std::string to_string(LoadKind kind) {
  switch (kind) {
    case LoadKind::PointTriple: return "point";
    case LoadKind::SmoothExponential: return "smooth";
    case LoadKind::Custom: return "custom";
  }
  return "custom";
}

CrackLoad CrackLoad::point_triple(double F, double a, double b) {
  if (!std::isfinite(F)) raise(ErrorKind::Domain, "F must be finite");
  if (!positive(a) || !positive(b) || !(b < a)) {
    raise(ErrorKind::Domain, "point loads need 0 < b < a");
  }
  CrackLoad load;
  load.kind_ = LoadKind::PointTriple;
  load.F_ = F;
  load.a_ = a;
  load.b_ = b;
  load.decay_ = 0.0;
  load.scale_ = a;
  load.positions_ = {-a, -a + b, -a - b};
  load.point_amplitudes_ = {{F / 2.0, F}, {F / 4.0, -F / 2.0}, {F / 4.0, -F / 2.0}};
  return load;
}

CrackLoad CrackLoad::smooth_exponential(double F) {
  if (!std::isfinite(F)) raise(ErrorKind::Domain, "F must be finite");
  CrackLoad load;
  load.kind_ = LoadKind::SmoothExponential;
  load.F_ = F;
  load.decay_ = 1.0;
  load.scale_ = 0.5;
  load.positions_ = {0.0};
  return load;
}

CrackLoad CrackLoad::custom(std::function<LoadTransforms(double)> transforms, double decay,
                            double scale, std::function<LoadTransforms(double)> tractions) {
  if (!transforms) raise(ErrorKind::Domain, "custom load needs a transform evaluator");
  if (!positive(decay)) raise(ErrorKind::Domain, "custom load decay exponent must be positive");
  if (!positive(scale)) raise(ErrorKind::Domain, "custom load length scale must be positive");
  const cplx jump0 = transforms(0.0).jump;
  if (!(std::abs(jump0) < 1e-12)) {
    raise(ErrorKind::SelfBalance,
          "custom load is not self-balanced: |[[p]](0)| = " + std::to_string(std::abs(jump0)));
  }
  CrackLoad load;
  load.kind_ = LoadKind::Custom;
  load.decay_ = decay;
  load.scale_ = scale;
  load.positions_ = {0.0};
  load.custom_ = std::move(transforms);
  load.custom_x_ = std::move(tractions);
  return load;
}

double CrackLoad::length_scale() const { return scale_; }

LoadTransforms CrackLoad::amplitude(std::size_t k, double xi) const {
  switch (kind_) {
    case LoadKind::PointTriple: return point_amplitudes_[k];
    case LoadKind::SmoothExponential: {
      const auto t = smooth_load_transforms(xi);
      return {F_ * t.avg, F_ * t.jump};
    }
    case LoadKind::Custom: return custom_(xi);
  }
  return {};
}

LoadTransforms CrackLoad::transforms(double xi) const {
  LoadTransforms out{0.0, 0.0};
  for (std::size_t k = 0; k < terms(); ++k) {
    const auto amp = amplitude(k, xi);
    const cplx phase = positions_[k] == 0.0 ? cplx(1.0) : std::polar(1.0, xi * positions_[k]);
    out.avg += amp.avg * phase;
    out.jump += amp.jump * phase;
  }
  return out;
}

std::optional<LoadTransforms> CrackLoad::tractions(double x) const {
  if (!(x < 0.0)) return LoadTransforms{0.0, 0.0};
  switch (kind_) {
    case LoadKind::PointTriple: return std::nullopt;
    case LoadKind::SmoothExponential: {
      const double upper = -(4.0 / 9.0) * F_ * x * std::exp(2.0 * x);
      const double lower = -F_ * x * std::exp(3.0 * x);
      return LoadTransforms{0.5 * (upper + lower), upper - lower};
    }
    case LoadKind::Custom:
      if (custom_x_) return custom_x_(x);
      return std::nullopt;
  }
  return std::nullopt;
}

LoadTransforms point_load_transforms(double F, double a, double b, double xi) {
  const cplx eb = std::polar(1.0, b * xi);
  const cplx shift = std::polar(1.0, -(a + b) * xi);
  return {(F / 4.0) * (eb + 1.0) * (eb + 1.0) * shift,
          -(F / 2.0) * (eb - 1.0) * (eb - 1.0) * shift};
}

LoadTransforms smooth_load_transforms(double xi) {
  const cplx upper = (4.0 / 9.0) / ((2.0 + cplx(0.0, xi)) * (2.0 + cplx(0.0, xi)));
  const cplx lower = 1.0 / ((3.0 + cplx(0.0, xi)) * (3.0 + cplx(0.0, xi)));
  return {0.5 * (upper + lower), upper - lower};
}

void InclusionSpec::validate() const {
  if (!positive(d)) raise(ErrorKind::Geometry, "inclusion distance d must be positive");
  if (!std::isfinite(phi) || phi == 0.0 || std::abs(phi) >= std::numbers::pi) {
    raise(ErrorKind::Geometry, "inclusion angle phi must lie in (-pi, 0) or (0, pi)");
  }
  if (!std::isfinite(alpha)) raise(ErrorKind::Geometry, "inclusion orientation must be finite");
  if (!positive(ell_b) || !(ell_a >= ell_b)) {
    raise(ErrorKind::Geometry, "inclusion semi-axes need ell_a >= ell_b > 0");
  }
  if (!rigid && !positive(nu_star)) raise(ErrorKind::Domain, "nu_star must be positive");
  if (!(epsilon() < 1.0)) raise(ErrorKind::Geometry, "epsilon = ell_a / d must be below 1");
}

Point inclusion_centre(const InclusionSpec& s) {
  return {s.d * std::cos(s.phi), s.d * std::sin(s.phi)};
}

}  // namespace ifcrack
