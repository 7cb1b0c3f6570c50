#pragma once

// Adaptive Gauss-Kronrod quadrature and the composite schemes built on it:
// square-root endpoint substitution, semi-infinite integrals with an
// extrapolated algebraic tail, and oscillatory half-line integrals closed
// with an integration-by-parts tail.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ifcrack/error.hpp"

namespace ifcrack::numerics {

using cplx = std::complex<double>;

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  /// Largest extent of a semi-infinite domain before the tail estimate has
  /// to meet tolerance. Zero selects the caller's problem-dependent default.
  double truncation_radius = 0.0;

  /// Throws ErrorKind::Domain on a non-positive rel_tol, negative abs_tol,
  /// max_subdivisions < 1 or negative truncation_radius.
  void validate() const;

  /// Same spec with both tolerances divided by `factor`.
  QuadratureSpec tightened(double factor) const;

  double truncation_or(double fallback) const {
    return truncation_radius > 0.0 ? truncation_radius : fallback;
  }
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  long evaluations = 0;

  QuadResult& operator+=(const QuadResult& other) {
    value += other.value;
    error += other.error;
    evaluations += other.evaluations;
    return *this;
  }
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

template <class T>
struct Panel {
  double lo;
  double hi;
  T value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class T, class F>
Panel<T> gk15(F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  T kronrod = T(kKronrodWeights[7]) * f(centre);
  T gauss = T(kGaussWeights[3]) * f(centre);
  if (!finite(kronrod)) {
    raise(ErrorKind::NonFiniteSample, "integrand is not finite at x = " + std::to_string(centre));
  }
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const T sum = f(centre - dx) + f(centre + dx);
    if (!finite(sum)) {
      raise(ErrorKind::NonFiniteSample,
            "integrand is not finite near x = " + std::to_string(centre - dx) + " / " +
                std::to_string(centre + dx));
    }
    kronrod += T(kKronrodWeights[j]) * sum;
    if (j % 2 == 1) gauss += T(kGaussWeights[j / 2]) * sum;
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

template <class F>
using integrand_value_t = std::decay_t<std::invoke_result_t<F&, double>>;

/// Globally adaptive GK15 on [lo, hi] with explicit tolerances.
template <class F>
QuadResult<integrand_value_t<F>> integrate_gk(F&& f, double lo, double hi, double rel_tol,
                                              double abs_tol, int max_subdivisions) {
  using T = integrand_value_t<F>;
  QuadResult<T> out;
  if (lo == hi) return out;
  if (hi < lo) {
    auto r = integrate_gk(f, hi, lo, rel_tol, abs_tol, max_subdivisions);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<detail::Panel<T>> heap;
  auto first = detail::gk15<T>(f, lo, hi);
  out.evaluations = 15;
  T total = first.value;
  double total_error = first.error;
  T settled{};
  double settled_error = 0.0;
  heap.push(first);
  int subdivisions = 1;

  while (total_error > std::max(abs_tol, rel_tol * std::abs(total)) && !heap.empty()) {
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    // Too narrow to split: the remaining error is rounding, not truncation.
    if (!(mid > worst.lo && mid < worst.hi) ||
        worst.hi - worst.lo < 64.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(worst.lo), std::abs(worst.hi))) {
      settled += worst.value;
      settled_error += worst.error;
      continue;
    }
    if (++subdivisions > max_subdivisions) {
      raise(ErrorKind::NonConvergence,
            "adaptive quadrature on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                "] exhausted " + std::to_string(max_subdivisions) + " subdivisions (error " +
                std::to_string(total_error) + ")");
    }
    auto left = detail::gk15<T>(f, worst.lo, mid);
    auto right = detail::gk15<T>(f, mid, worst.hi);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  T sum = settled;
  double err = settled_error;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.error = err;
  return out;
}

/// Integral of f over [lo, hi]; estimated error <= max(abs_tol, rel_tol |I|).
template <class F>
QuadResult<integrand_value_t<F>> integrate_adaptive(F&& f, double lo, double hi,
                                                    const QuadratureSpec& spec) {
  spec.validate();
  return integrate_gk(std::forward<F>(f), lo, hi, spec.rel_tol, spec.abs_tol,
                      spec.max_subdivisions);
}

/// Integral over [lo, hi] of an integrand with an integrable (x - lo)^(-1/2)
/// singularity, via x = lo + s^2.
template <class F>
QuadResult<integrand_value_t<F>> integrate_sqrt_endpoint(F&& f, double lo, double hi,
                                                         double rel_tol, double abs_tol,
                                                         int max_subdivisions) {
  using T = integrand_value_t<F>;
  auto mapped = [&](double s) -> T { return T(2.0 * s) * f(lo + s * s); };
  return integrate_gk(mapped, 0.0, std::sqrt(hi - lo), rel_tol, abs_tol, max_subdivisions);
}

struct TailOptions {
  /// Width of the first panel; later panels double.
  double first_width = 1.0;
  /// Integrand behaves like (x - start)^(-1/2) at the start point.
  bool sqrt_at_start = false;
  /// Domain extent beyond which the tail must already be resolved.
  double x_max = 1e12;
};

/// Integral of f over [start, inf) for algebraically (or faster) decaying f.
/// Panels double in width; once the panel integrals decay geometrically the
/// remaining tail is extrapolated from their ratio and its uncertainty is
/// added to the error estimate.
template <class F>
QuadResult<integrand_value_t<F>> integrate_to_infinity(F&& f, double start,
                                                       const QuadratureSpec& spec,
                                                       const TailOptions& opts = {}) {
  using T = integrand_value_t<F>;
  spec.validate();
  const double panel_rel = 0.1 * spec.rel_tol;
  const double panel_abs = 0.1 * spec.abs_tol;
  QuadResult<T> acc;
  double lo = start;
  double width = opts.first_width;
  T prev{};
  T prev_ratio{};
  bool have_tail = false;
  int small_run = 0;

  for (int k = 0;; ++k) {
    const double hi = lo + width;
    QuadResult<T> panel = (k == 0 && opts.sqrt_at_start)
                              ? integrate_sqrt_endpoint(f, lo, hi, panel_rel, panel_abs,
                                                        spec.max_subdivisions)
                              : integrate_gk(f, lo, hi, panel_rel, panel_abs, spec.max_subdivisions);
    acc += panel;
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(acc.value));

    small_run = std::abs(panel.value) <= 1e-3 * tol ? small_run + 1 : 0;
    if (k >= 3 && small_run >= 2) return acc;

    if (k >= 2 && std::abs(prev) > 0.0) {
      const T ratio = panel.value / prev;
      if (std::abs(ratio) < 0.9) {
        const T tail = panel.value * ratio / (T(1.0) - ratio);
        if (std::abs(tail) <= 0.1 * tol) {
          acc.value += tail;
          acc.error += std::abs(tail);
          return acc;
        }
        if (have_tail) {
          const T alt = panel.value * prev_ratio / (T(1.0) - prev_ratio);
          const double spread = std::abs(tail - alt);
          if (spread <= 0.5 * tol) {
            acc.value += tail;
            acc.error += spread;
            return acc;
          }
        }
        have_tail = true;
      } else {
        have_tail = false;
      }
      prev_ratio = ratio;
    }
    if (hi >= opts.x_max) {
      raise(ErrorKind::TailBoundExceeded,
            "tail beyond x = " + std::to_string(hi) + " does not meet tolerance " +
                std::to_string(tol));
    }
    prev = panel.value;
    lo = hi;
    width *= 2.0;
  }
}

struct OscillatoryOptions {
  bool sqrt_at_start = false;
  /// Used only when omega == 0.
  double first_width = 1.0;
  double x_max = 1e12;
};

namespace detail {

// Integral over [x, inf) of f(t) e^{i omega t}, by three integrations by parts;
// derivatives by five-point differences with a step tied to the oscillation.
template <class F>
cplx ibp_tail(F& f, double omega, double x, double max_step) {
  const double h = std::min(0.1 / std::abs(omega), max_step);
  const cplx fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
  const cplx d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  const cplx d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  const cplx iw(0.0, omega);
  return -std::exp(cplx(0.0, omega * x)) * (f0 / iw - d1 / (iw * iw) + d2 / (iw * iw * iw));
}

}  // namespace detail

/// Integral of f(x) e^{i omega x} over [start, inf). f must be smooth on
/// (start, inf) and decay at least like 1/x. Half-period panels are added
/// until two successive integration-by-parts tail closures agree.
template <class F>
QuadResult<cplx> integrate_oscillatory(F&& f, double omega, double start,
                                       const QuadratureSpec& spec,
                                       const OscillatoryOptions& opts = {}) {
  spec.validate();
  auto amp = [&](double x) -> cplx { return cplx(f(x)); };
  if (omega == 0.0) {
    return integrate_to_infinity(amp, start, spec,
                                 TailOptions{opts.first_width, opts.sqrt_at_start, opts.x_max});
  }
  auto g = [&](double x) -> cplx { return amp(x) * std::exp(cplx(0.0, omega * x)); };
  const double half = std::numbers::pi / std::abs(omega);
  const double panel_rel = 0.1 * spec.rel_tol;
  const double panel_abs = 0.1 * spec.abs_tol;

  QuadResult<cplx> acc;
  double x = start;
  int panels = 0;
  int target = 16;
  bool have_prev = false;
  cplx prev_total{};
  for (;;) {
    for (; panels < target; ++panels) {
      acc += (panels == 0 && opts.sqrt_at_start)
                 ? integrate_sqrt_endpoint(g, x, x + half, panel_rel, panel_abs,
                                           spec.max_subdivisions)
                 : integrate_gk(g, x, x + half, panel_rel, panel_abs, spec.max_subdivisions);
      x += half;
    }
    const cplx total = acc.value + detail::ibp_tail(amp, omega, x, 0.25 * (x - start));
    acc.evaluations += 5;
    if (have_prev) {
      const double diff = std::abs(total - prev_total);
      if (diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        QuadResult<cplx> out = acc;
        out.value = total;
        out.error += diff;
        return out;
      }
    }
    if (x >= opts.x_max) {
      raise(ErrorKind::TailBoundExceeded,
            "oscillatory tail beyond x = " + std::to_string(x) + " did not settle");
    }
    prev_total = total;
    have_prev = true;
    target *= 2;
  }
}

enum class HalfLine { Negative, Positive };

/// Integral of f(x) e^{i xi x} over x < 0 (Negative) or x > 0 (Positive).
/// `scale` is the length over which f varies near the origin.
template <class F>
QuadResult<cplx> halfline_fourier(F&& f, HalfLine side, double xi, const QuadratureSpec& spec,
                                  double scale = 1.0) {
  OscillatoryOptions opts;
  opts.first_width = scale;
  opts.x_max = spec.truncation_or(1e12 * scale);
  if (side == HalfLine::Positive) return integrate_oscillatory(f, xi, 0.0, spec, opts);
  auto mirrored = [&](double t) { return f(-t); };
  return integrate_oscillatory(mirrored, -xi, 0.0, spec, opts);
}

/// Principal value of the integral over (0, inf) of F(t) e^{i omega t} / (t - p)
/// for real p != 0. F may behave like t^(-1/2) at the origin and must decay
/// at infinity (at least like a bounded oscillation when omega != 0). The
/// pole is handled by subtracting F(p) e^{i omega p} on a symmetric window.
template <class F>
QuadResult<cplx> pv_cauchy_halfline(F&& f, double omega, double p, const QuadratureSpec& spec,
                                    double scale = 1.0) {
  if (p == 0.0 || !std::isfinite(p)) raise(ErrorKind::Domain, "Cauchy pole must be nonzero");
  auto amp = [&](double t) -> cplx { return cplx(f(t)); };
  auto over_pole = [&](double t) -> cplx { return amp(t) / (t - p); };
  OscillatoryOptions tail;
  tail.first_width = scale;
  tail.x_max = spec.truncation_or(1e12 * std::max(scale, std::abs(p)));
  if (p < 0.0) {
    tail.sqrt_at_start = true;
    return integrate_oscillatory(over_pole, omega, 0.0, spec, tail);
  }

  const double panel_rel = 0.1 * spec.rel_tol;
  const double panel_abs = 0.1 * spec.abs_tol;
  const double r = omega == 0.0 ? 0.5 * p : std::min(0.5 * p, std::numbers::pi / std::abs(omega));
  auto wave = [&](double t) { return std::exp(cplx(0.0, omega * t)); };
  auto head = [&](double t) -> cplx { return amp(t) * wave(t) / (t - p); };
  QuadResult<cplx> out;
  {
    // Half-period panels keep each adaptive run to a single oscillation.
    const double width = omega == 0.0 ? p - r : std::numbers::pi / std::abs(omega);
    double lo = 0.0;
    while (lo < p - r) {
      const double hi = std::min(p - r, lo + width);
      out += lo == 0.0 ? integrate_sqrt_endpoint(head, lo, hi, panel_rel, panel_abs,
                                                 spec.max_subdivisions)
                       : integrate_gk(head, lo, hi, panel_rel, panel_abs, spec.max_subdivisions);
      lo = hi;
    }
  }
  const cplx at_pole = amp(p) * wave(p);
  auto subtracted = [&](double t) -> cplx { return (amp(t) * wave(t) - at_pole) / (t - p); };
  out += integrate_gk(subtracted, p - r, p, panel_rel, panel_abs, spec.max_subdivisions);
  out += integrate_gk(subtracted, p, p + r, panel_rel, panel_abs, spec.max_subdivisions);
  out += integrate_oscillatory(over_pole, omega, p + r, spec, tail);
  return out;
}

/// Principal value of the integral over (0, inf) of g(t) / (t^2 - xi^2) for an
/// even g with finite limits at 0 and g(t) = O(1/t) at infinity. The
/// singular part is removed with PV int_0^inf dt / (t^2 - xi^2) = 0.
/// g is assumed to vary on the scale t ~ 1.
double pv_integral_even_logkernel(const std::function<double(double)>& g, double xi,
                                  const QuadratureSpec& spec);

}  // namespace ifcrack::numerics
