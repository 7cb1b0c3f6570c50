#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ifcrack/error.hpp"
#include "ifcrack/perturbation.hpp"
#include "ifcrack/quadrature.hpp"

using namespace ifcrack;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const DipoleMatrix& m) {
  return std::max({std::abs(m.m11), std::abs(m.m12), std::abs(m.m22)});
}

void check_close(const DipoleMatrix& a, const DipoleMatrix& b, double tol) {
  const double scale = std::max(max_abs(a), max_abs(b));
  CHECK(std::abs(a.m11 - b.m11) <= tol * scale);
  CHECK(std::abs(a.m12 - b.m12) <= tol * scale);
  CHECK(std::abs(a.m22 - b.m22) <= tol * scale);
}

Bimaterial map_material() { return material_from_dimensionless(0.0, 1.0, 1.0); }

InclusionSpec map_inclusion() {
  InclusionSpec inc;
  inc.d = 1.0;
  inc.phi = kPi / 2.0;
  inc.alpha = 0.0;
  inc.ell_a = 0.1;
  inc.ell_b = 0.05;
  inc.nu_star = 5.0;
  return inc;
}

}  // namespace

TEST_CASE("elastic dipole examples") {
  const auto zero = dipole_elliptic(0.3, 0.1, 0.7, 1.0);
  CHECK(max_abs(zero) == 0.0);
  check_close(dipole_elliptic(1.0, 1.0, 0.4, 5.0), {-4.0 * kPi / 3.0, 0.0, -4.0 * kPi / 3.0},
              1e-14);
  for (double nu : {0.1, 3.0}) {
    const double v = -2.0 * kPi * 0.25 * (nu - 1.0) / (1.0 + nu);
    check_close(dipole_elliptic(0.5, 0.5, 1.1, nu), {v, 0.0, v}, 1e-14);
  }
  CHECK_THROWS_AS(dipole_elliptic(0.1, 0.2, 0.0, 2.0), Error);
  CHECK_THROWS_AS(dipole_elliptic(0.2, 0.1, 0.0, 0.0), Error);
}

TEST_CASE("rigid dipole examples") {
  check_close(dipole_rigid(0.5, 0.5, 0.9), {2.0 * kPi * 0.25, 0.0, 2.0 * kPi * 0.25}, 1e-14);
  for (double e : {0.05, 0.3, 0.8}) {
    for (double alpha : {0.0, 0.4, 1.3, 2.9}) {
      const auto rigid = dipole_rigid(1.0, e, alpha);
      check_close(dipole_elliptic(1.0, e, alpha, 1e-8), rigid, 1e-6);
      const auto ev = rigid.eigenvalues();
      CHECK(ev[0] > 0.0);
      CHECK(ev[0] <= ev[1]);
    }
  }
}

TEST_CASE("dipole definiteness follows the contrast") {
  for (double e : {0.01, 0.2, 0.7, 1.0}) {
    for (double alpha : {0.0, 0.3, 1.57, 2.5}) {
      const auto soft = dipole_elliptic(1.0, e, alpha, 5.0).eigenvalues();
      CHECK(soft[1] < 0.0);
      const auto stiff = dipole_elliptic(1.0, e, alpha, 0.2).eigenvalues();
      CHECK(stiff[0] > 0.0);
      const auto m = dipole_elliptic(1.0, e, alpha, 3.0);
      // Rotation by pi leaves the dipole unchanged.
      check_close(dipole_elliptic(1.0, e, alpha + kPi, 3.0), m, 1e-14);
    }
  }
}

TEST_CASE("scaled dipole uses the magnified inclusion") {
  auto inc = map_inclusion();
  check_close(scaled_dipole(inc), dipole_elliptic(1.0, 0.5, 0.0, 5.0), 1e-15);
  inc.rigid = true;
  check_close(scaled_dipole(inc), dipole_rigid(1.0, 0.5, 0.0), 1e-15);
}

TEST_CASE("boundary-layer derivative on the interface line") {
  const DipoleMatrix identity{1.0, 0.0, 1.0};
  CHECK(boundary_layer_dy(0.0, {0.0, 1.0}, identity, {0.0, 1.0}) ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));
  CHECK(boundary_layer_dy(0.3, {0.4, 1.0}, DipoleMatrix{}, {0.1, 0.5}) == 0.0);
  const Vec2 G{0.7, -0.2};
  const DipoleMatrix M{1.0, 0.3, -0.5};
  const Point Y{0.2, 0.6};
  for (double x : {-1e3, 1e3}) {
    const double v = boundary_layer_dy(x, G, M, Y) * x * x;
    const double w = boundary_layer_dy(10.0 * x, G, M, Y) * 100.0 * x * x;
    CHECK(std::abs(v) < 1.0);
    CHECK(std::abs(w - v) < 1e-2 * std::abs(v));
  }
  CHECK_THROWS_AS(boundary_layer_dy(0.5, G, M, {0.5, 0.0}), Error);
}

TEST_CASE("closed-form profile transforms match quadrature") {
  numerics::QuadratureSpec spec;
  spec.rel_tol = 1e-11;
  spec.abs_tol = 1e-14;
  for (const Point Y : {Point{0.3, 0.8}, Point{-0.6, 0.4}, Point{0.5, -0.7}, Point{-1.2, -0.3}}) {
    for (double xi : {0.0, 0.05, 1.0, -2.5, 20.0}) {
      const auto t = boundary_layer_transforms(Y, xi);
      for (int j = 0; j < 2; ++j) {
        auto v = [&](double x) {
          const DipoleMatrix M{1.0, 0.0, 1.0};
          return boundary_layer_dy(x, j == 0 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0}, M, Y);
        };
        const auto m = numerics::halfline_fourier(v, numerics::HalfLine::Negative, xi, spec,
                                                  std::abs(Y.y));
        const auto p = numerics::halfline_fourier(v, numerics::HalfLine::Positive, xi, spec,
                                                  std::abs(Y.y));
        CHECK(std::abs(t.minus[j] - m.value) < 1e-8 * std::max(1.0, std::abs(m.value)));
        CHECK(std::abs(t.plus[j] - p.value) < 1e-8 * std::max(1.0, std::abs(p.value)));
      }
    }
  }
  CHECK_THROWS_AS(boundary_layer_transforms({0.2, 0.0}, 1.0), Error);
}

TEST_CASE("effective traction transforms") {
  const Vec2 G{0.3, -1.1};
  const DipoleMatrix M{0.5, 0.2, 0.9};
  const Point Y{0.4, 0.7};
  for (double xi : {-3.0, 0.0, 0.4, 12.0}) {
    const auto same = effective_traction_transforms(G, M, Y, {2.0, 2.0, 1.0}, xi);
    CHECK(same.Q_minus == cplx(0.0));
    CHECK(same.Q_plus == cplx(0.0));
    const Bimaterial m{3.0, 1.0, 1.0};
    const double ms = (m.mu1 - m.mu2) / (m.mu1 + m.mu2);
    const auto t = effective_traction_transforms(G, M, Y, m, xi);
    CHECK(std::abs(t.Q_minus - 2.0 * ms * t.P_minus) <= 1e-15 * std::abs(t.Q_minus));
    CHECK(std::abs(t.Q_plus - 2.0 * ms * t.P_plus) <= 1e-15 * std::abs(t.Q_plus));
  }
  // xi = 0: plain half-line integrals of P(x) = -(mu1 + mu2)/2 dw/dy.
  const Bimaterial m{3.0, 1.0, 1.0};
  const auto t0 = effective_traction_transforms(G, M, Y, m, 0.0);
  numerics::QuadratureSpec spec;
  spec.rel_tol = 1e-11;
  auto P = [&](double x) { return -0.5 * (m.mu1 + m.mu2) * boundary_layer_dy(x, G, M, Y); };
  auto negative = [&](double t) { return P(-t); };
  const auto lo = numerics::integrate_to_infinity(negative, 0.0, spec);
  const auto hi = numerics::integrate_to_infinity(P, 0.0, spec);
  CHECK(std::abs(t0.P_minus - lo.value) < 1e-8 * std::abs(lo.value));
  CHECK(std::abs(t0.P_plus - hi.value) < 1e-8 * std::abs(hi.value));
}

TEST_CASE("Betti basis approaches the perfect-interface weight-function gradient") {
  // Far from the tip on the scale 1/mu0 the interface looks perfect, and the
  // Betti integrals of the unit profiles become the gradient of the mode III
  // weight function, (1/2) r^{-3/2} (sin(3 phi/2), -cos(3 phi/2)) at polar
  // angle phi (reciprocity with the dipole source at Y). The approach is
  // O((mu0 r)^{-1/2}).
  double prev = 1.0;
  for (double mu0r : {20.0, 200.0, 2000.0}) {
    const Bimaterial m{1.0, 1.0, 2.0 / mu0r};
    const PerturbationSolver solver(CrackLoad::smooth_exponential(), m);
    double worst = 0.0;
    for (double deg = 10.0; deg <= 170.0; deg += 20.0) {
      const double phi = deg * kPi / 180.0;
      const auto D = solver.betti_basis({std::cos(phi), std::sin(phi)}).D;
      const double ex = 0.5 * std::sin(1.5 * phi);
      const double ey = -0.5 * std::cos(1.5 * phi);
      worst = std::max(worst, std::hypot(D[0] - ex, D[1] - ey) / 0.5);
    }
    CHECK(worst < 1.0 / std::sqrt(mu0r));
    CHECK(worst < prev);
    prev = worst;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("classification") {
  CHECK(classify(1e-3, 1e-6) == Effect::Amplifying);
  CHECK(classify(-1e-3, 1e-6) == Effect::Shielding);
  CHECK(classify(1e-7, 1e-6) == Effect::Neutral);
  CHECK(classify(0.0, 0.0) == Effect::Neutral);
  CHECK(to_string(Effect::Shielding) == "shielding");
  CHECK(to_string(Effect::Amplifying) == "amplifying");
  CHECK(to_string(Effect::Neutral) == "neutral");
}

TEST_CASE("Delta sigma0 is linear in the dipole and the load") {
  const PerturbationSolver solver(CrackLoad::smooth_exponential(), map_material());
  const PerturbationSolver doubled(CrackLoad::smooth_exponential(2.0), map_material());
  const auto inc = map_inclusion();
  const Point Y = inclusion_centre(inc);
  const auto grad = solver.unperturbed().grad_u0(Y);
  const auto basis = solver.betti_basis(Y);
  const auto M = scaled_dipole(inc);
  const auto r1 = solver.combine(M, inc.epsilon(), grad, basis);
  const auto r2 = solver.combine(M.scaled(2.0), inc.epsilon(), grad, basis);
  CHECK(std::abs(r2.delta_sigma0 / r1.delta_sigma0 - 2.0) < 1e-8);
  CHECK(solver.combine(DipoleMatrix{}, inc.epsilon(), grad, basis).delta_sigma0 == 0.0);

  const auto full = solver.evaluate(inc);
  CHECK(full.delta_sigma0 == doctest::Approx(r1.delta_sigma0).epsilon(1e-12));
  CHECK(full.sigma0_perturbed ==
        doctest::Approx(full.sigma0 - inc.epsilon() * inc.epsilon() * full.delta_sigma0));
  const auto twice = doubled.evaluate(inc);
  CHECK(std::abs(twice.delta_sigma0 / full.delta_sigma0 - 2.0) < 1e-8);
  CHECK(std::abs(twice.sigma0 / full.sigma0 - 2.0) < 1e-8);

  auto neutral = inc;
  neutral.nu_star = 1.0;
  const auto zero = solver.evaluate(neutral);
  CHECK(zero.delta_sigma0 == 0.0);
  CHECK(zero.sign == Effect::Neutral);
}

TEST_CASE("circular inclusions") {
  const PerturbationSolver solver(CrackLoad::smooth_exponential(), map_material());
  auto circle = map_inclusion();
  circle.phi = 2.0;
  circle.ell_b = circle.ell_a;
  const auto a0 = solver.evaluate(circle);
  circle.alpha = 1.1;
  const auto a1 = solver.evaluate(circle);
  CHECK(std::abs(a1.delta_sigma0 - a0.delta_sigma0) < 1e-8 * std::abs(a0.delta_sigma0));
  circle.nu_star = 0.2;
  const auto stiff = solver.evaluate(circle);
  CHECK(a0.sign != Effect::Neutral);
  CHECK(stiff.sign != Effect::Neutral);
  CHECK(stiff.sign != a0.sign);
  // The circle dipole at 1/nu is -1 times the one at nu.
  CHECK(std::abs(stiff.delta_sigma0 + a0.delta_sigma0) < 1e-10 * std::abs(a0.delta_sigma0));
}

TEST_CASE("sign maps") {
  const auto load = CrackLoad::smooth_exponential();
  const auto m = map_material();
  const std::vector<double> phi{kPi / 3.0};
  const std::vector<double> alpha{0.3, 0.3 + kPi, 1.2};
  const auto map = sign_map(load, m, map_inclusion(), phi, alpha);
  REQUIRE(map.cells.size() == 3);
  CHECK(std::abs(map.cells[1].delta_sigma0 - map.cells[0].delta_sigma0) <
        1e-8 * std::abs(map.cells[0].delta_sigma0));
  CHECK(std::abs(map.cells[2].delta_sigma0 - map.cells[0].delta_sigma0) >
        1e-6 * std::abs(map.cells[0].delta_sigma0));

  auto circle = map_inclusion();
  circle.ell_b = circle.ell_a;
  const auto flat = sign_map(load, m, circle, phi, alpha);
  for (const auto& cell : flat.cells) {
    CHECK(std::abs(cell.delta_sigma0 - flat.cells[0].delta_sigma0) <
          1e-8 * std::abs(flat.cells[0].delta_sigma0));
  }
  // The map cell equals a direct evaluation.
  auto inc = map_inclusion();
  inc.phi = phi[0];
  inc.alpha = alpha[2];
  CHECK(delta_sigma0(load, m, inc).delta_sigma0 ==
        doctest::Approx(map.cells[2].delta_sigma0).epsilon(1e-12));
}

TEST_CASE("perturbation geometry guards") {
  const PerturbationSolver solver(CrackLoad::smooth_exponential(), map_material());
  auto inc = map_inclusion();
  inc.phi = 0.01;
  CHECK_THROWS_AS(solver.evaluate(inc), Error);
  inc = map_inclusion();
  inc.ell_a = 1.5;
  CHECK_THROWS_AS(solver.evaluate(inc), Error);
  inc = map_inclusion();
  inc.ell_b = 0.2;
  CHECK_THROWS_AS(solver.evaluate(inc), Error);
}
