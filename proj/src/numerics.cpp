#include "vortex/numerics.hpp"

#include <cmath>
#include <numbers>

namespace vortex {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kAgmTol = 1e-15;
}  // namespace

double ellip_k(double m) {
  if (!(m >= 0.0) || m >= 1.0) {
    throw std::domain_error("ellip_k: parameter m must satisfy 0 <= m < 1");
  }
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  while (std::abs(a - b) > kAgmTol * a) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

double ellip_e(double m) {
  if (!(m >= 0.0) || m > 1.0) {
    throw std::domain_error("ellip_e: parameter m must satisfy 0 <= m <= 1");
  }
  if (m == 1.0) return 1.0;
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  // E = K * (1 - sum 2^(n-1) c_n^2), c_0^2 = m, c_{n+1} = (a_n - b_n)/2.
  double c2_sum = 0.5 * m;
  double weight = 0.5;
  while (std::abs(a - b) > kAgmTol * a) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    weight *= 2.0;
    c2_sum += weight * c * c;
  }
  return kPi / (2.0 * a) * (1.0 - c2_sum);
}

double loop_bracket(double m) {
  if (!(m >= 0.0) || m >= 1.0) {
    throw std::domain_error("loop_bracket: parameter m must satisfy 0 <= m < 1");
  }
  if (m < 0.25) {
    // (1 - m/2) K - E = (pi/2) sum_{k>=2} t_k m^k with
    // t_k = c_k 2k/(2k-1) - c_{k-1}/2 and c_k = [ (2k)! / (4^k (k!)^2) ]^2.
    double ck = 0.25;  // c_1
    double mk = m;     // m^k at k = 1
    double sum = 0.0;
    for (int k = 2; k <= 200; ++k) {
      const double ck_prev = ck;
      const double ratio = (2.0 * k - 1.0) / (2.0 * k);
      ck = ck_prev * ratio * ratio;
      mk *= m;
      const double term = (ck * 2.0 * k / (2.0 * k - 1.0) - 0.5 * ck_prev) * mk;
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return 0.5 * kPi * sum;
  }
  return (1.0 - 0.5 * m) * ellip_k(m) - ellip_e(m);
}

OdeTrajectory solve_ode(const std::function<double(double, double)>& rhs, double y0,
                        const OdeSpec& spec) {
  if (!(spec.step > 0.0)) throw std::invalid_argument("solve_ode: step must be positive");
  if (!(spec.t_end > spec.t_start)) {
    throw std::invalid_argument("solve_ode: t_end must exceed t_start");
  }
  const double span = spec.t_end - spec.t_start;
  if (span / spec.step < 2.0) {
    throw std::invalid_argument("solve_ode: window must cover at least two steps");
  }
  const auto n = static_cast<long long>(std::llround(span / spec.step));
  const double h = span / static_cast<double>(n);

  auto eval = [&rhs](double t, double y) {
    const double v = rhs(t, y);
    if (!std::isfinite(v)) {
      throw NonConvergenceError("solve_ode: rhs evaluated to a non-finite value");
    }
    return v;
  };

  OdeTrajectory out;
  out.times.reserve(n + 1);
  out.values.reserve(n + 1);
  double y = y0;
  out.times.push_back(spec.t_start);
  out.values.push_back(y);
  for (long long i = 0; i < n; ++i) {
    const double t = spec.t_start + h * static_cast<double>(i);
    const double k1 = eval(t, y);
    const double k2 = eval(t + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = eval(t + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = eval(t + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
    out.times.push_back(spec.t_start + h * static_cast<double>(i + 1));
    out.values.push_back(y);
  }
  return out;
}

}  // namespace vortex
