#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace vortex {

/// Tolerances for the adaptive quadrature routines.
struct QuadratureSpec {
  double abs_tol = 1e-15;
  double rel_tol = 1e-10;
  int max_depth = 40;
};

/// Fixed-step integration window for the ODE solver.
struct OdeSpec {
  double step;
  double t_start;
  double t_end;
};

/// Raised when an iterative routine exhausts its budget before reaching
/// the requested tolerance, or when an integrand/rhs turns non-finite.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complete elliptic integral of the first kind, K(m), as a function of the
/// parameter m = k^2 with 0 <= m < 1.  AGM iteration, ~1e-15 relative.
double ellip_k(double m);

/// Complete elliptic integral of the second kind, E(m), parameter convention,
/// 0 <= m <= 1.
double ellip_e(double m);

/// (1 - m/2) K(m) - E(m).  This combination appears in the loop vector
/// potential and cancels catastrophically for small m when formed from K and
/// E directly; a power series takes over below m = 0.25.
double loop_bracket(double m);

namespace detail {

inline void require_finite(double v) {
  if (!std::isfinite(v)) {
    throw NonConvergenceError("integrand evaluated to a non-finite value");
  }
}

template <typename F>
double adaptive_simpson(F& f, double a, double mid, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth, int max_depth, bool& converged) {
  const double lm = 0.5 * (a + mid);
  const double rm = 0.5 * (mid + b);
  const double flm = f(lm);
  const double frm = f(rm);
  require_finite(flm);
  require_finite(frm);
  const double h12 = (b - a) / 12.0;
  const double left = h12 * (fa + 4.0 * flm + fm);
  const double right = h12 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // delta/15 estimates the refined error; accepting at |delta| <= tol keeps
  // a 15x safety margin against under-estimation.  The first two levels are
  // never accepted: structured integrands can make the coarse estimates
  // agree by coincidence.
  if (depth >= 2 && std::abs(delta) <= tol) {
    return left + right + delta / 15.0;
  }
  if (depth >= max_depth) {
    converged = false;
    return left + right + delta / 15.0;
  }
  const double half_tol = 0.5 * tol;
  return adaptive_simpson(f, a, lm, mid, fa, flm, fm, left, half_tol, depth + 1, max_depth,
                          converged) +
         adaptive_simpson(f, mid, rm, b, fm, frm, fb, right, half_tol, depth + 1, max_depth,
                          converged);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b].
///
/// The acceptance tolerance is max(abs_tol, rel_tol * scale) where scale is
/// the larger of the initial estimates of |integral| and integral of |f|;
/// the L1 scale keeps strongly cancelling integrands (odd kernels near a
/// zero crossing) convergent.  Throws NonConvergenceError when max_depth is
/// exhausted before the tolerance is met.
template <typename F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_depth < 1) {
    throw std::invalid_argument("integrate: invalid QuadratureSpec");
  }
  const double mid = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(mid);
  const double fb = f(b);
  detail::require_finite(fa);
  detail::require_finite(fm);
  detail::require_finite(fb);
  const double h6 = (b - a) / 6.0;
  const double whole = h6 * (fa + 4.0 * fm + fb);
  const double l1 = h6 * (std::abs(fa) + 4.0 * std::abs(fm) + std::abs(fb));
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::max(std::abs(whole), l1));
  bool converged = true;
  const double result =
      detail::adaptive_simpson(f, a, mid, b, fa, fm, fb, whole, tol, 0, spec.max_depth, converged);
  if (!converged) {
    throw NonConvergenceError("integrate: max_depth exhausted before reaching tolerance");
  }
  return result;
}

/// Sampled solution of a scalar ODE.
struct OdeTrajectory {
  std::vector<double> times;
  std::vector<double> values;
};

/// Classical fixed-step RK4 for dy/dt = rhs(t, y), y(t_start) = y0.
///
/// The window is divided into round(span/step) uniform steps (at least 2);
/// every step is recorded.  Non-finite rhs evaluations are rejected.
OdeTrajectory solve_ode(const std::function<double(double, double)>& rhs, double y0,
                        const OdeSpec& spec);

}  // namespace vortex
