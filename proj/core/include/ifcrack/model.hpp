#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ifcrack {

using cplx = std::complex<double>;

/// Two half-planes bonded along y = 0 by a soft imperfect interface
/// (material 1 above, material 2 below).
struct Bimaterial {
  double mu1 = 1.0;
  double mu2 = 1.0;
  double kappa = 1.0;

  void validate() const;
};

struct DerivedParams {
  double mu0;         // (mu1 + mu2) / (mu1 mu2 kappa)
  double mu_star;     // (mu1 - mu2) / (mu1 + mu2)
  double kappa_star;  // kappa (mu1 + mu2) / a
};

DerivedParams derive_params(const Bimaterial& m, double a);

/// Material with mu1 + mu2 = 2 realising the given contrast and imperfection.
Bimaterial material_from_dimensionless(double mu_star, double kappa_star, double a);

struct LoadTransforms {
  cplx avg;
  cplx jump;
};

enum class LoadKind { PointTriple, SmoothExponential, Custom };

std::string to_string(LoadKind kind);

/// Self-balanced crack-face tractions on x < 0, stored as a sum of terms
///   <p>(xi) = sum_k avg_k(xi) e^{i xi x_k},   [[p]](xi) = sum_k jump_k(xi) e^{i xi x_k}
/// so that quadratures can treat the phase factors as explicit oscillations.
class CrackLoad {
 public:
  /// Force F on the upper face at x = -a, balanced by F/2 on the lower face
  /// at x = -a - b and x = -a + b.
  static CrackLoad point_triple(double F, double a, double b);

  /// p+ = -(4/9) F x e^{2x}, p- = -F x e^{3x} on x < 0.
  static CrackLoad smooth_exponential(double F = 1.0);

  /// Transforms supplied directly. `decay` is the exponent delta in
  /// O(xi^{-(1+delta)}); `scale` the length over which the tractions vary.
  /// Optional x-domain tractions (x < 0) enable the perfect-interface factor.
  static CrackLoad custom(std::function<LoadTransforms(double)> transforms, double decay,
                          double scale,
                          std::function<LoadTransforms(double)> tractions = nullptr);

  LoadKind kind() const { return kind_; }
  double F() const { return F_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double decay() const { return decay_; }
  /// Length over which the tractions vary; sets the first quadrature panels.
  double length_scale() const;

  std::size_t terms() const { return positions_.size(); }
  double position(std::size_t k) const { return positions_[k]; }
  /// Amplitudes of term k, without its phase factor.
  LoadTransforms amplitude(std::size_t k, double xi) const;
  /// Full transforms at xi.
  LoadTransforms transforms(double xi) const;

  /// <p>(x) and [[p]](x) for x < 0; only for smooth and custom loads that
  /// provide them.
  std::optional<LoadTransforms> tractions(double x) const;

 private:
  LoadKind kind_ = LoadKind::Custom;
  double F_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  double decay_ = 1.0;
  double scale_ = 1.0;
  std::vector<double> positions_;
  std::vector<LoadTransforms> point_amplitudes_;
  std::function<LoadTransforms(double)> custom_;
  std::function<LoadTransforms(double)> custom_x_;
};

LoadTransforms point_load_transforms(double F, double a, double b, double xi);
LoadTransforms smooth_load_transforms(double xi);

struct Point {
  double x;
  double y;
};

struct InclusionSpec {
  double d = 1.0;
  double phi = 1.5707963267948966;
  double alpha = 0.0;
  double ell_a = 0.1;
  double ell_b = 0.05;
  double nu_star = 5.0;
  bool rigid = false;

  double epsilon() const { return ell_a / d; }
  double aspect() const { return ell_b / ell_a; }
  void validate() const;
};

Point inclusion_centre(const InclusionSpec& s);

}  // namespace ifcrack
