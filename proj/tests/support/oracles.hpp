#pragma once
// Independent numerical oracles used by the test suites. These deliberately
// work in radians with std::sin so they share no kernel code with the
// library's half-turn implementation.

#include <array>
#include <cmath>
#include <vector>

namespace oracles {

inline constexpr double kPi = 3.14159265358979323846;

// Velocity of the alternating shear at time t (shear index floor(t)).
inline std::array<double, 2> shear_velocity(double t, const std::array<double, 2>& x,
                                            const std::vector<double>& xi_rad, double A) {
  auto s = static_cast<size_t>(t);
  if (s >= xi_rad.size()) s = xi_rad.size() - 1;
  if (s % 2 == 0) return {A * std::sin(x[1] - xi_rad[s]), 0.0};
  return {0.0, A * std::sin(x[0] - xi_rad[s])};
}

// Classic RK4 over the piecewise-constant-in-time field, stepping exactly to
// each shear boundary so the discontinuities are never straddled.
inline std::array<double, 2> rk4_flow_point(std::array<double, 2> x,
                                            const std::vector<double>& xi_rad, double A,
                                            double t_end, double dt) {
  double t = 0.0;
  while (t < t_end - 1e-15) {
    double boundary = std::floor(t) + 1.0;
    double h = std::min({dt, t_end - t, boundary - t});
    if (h <= 0) break;
    double tm = t + 0.5 * h;
    auto k1 = shear_velocity(t + 1e-12, x, xi_rad, A);
    auto x2 = std::array<double, 2>{x[0] + 0.5 * h * k1[0], x[1] + 0.5 * h * k1[1]};
    auto k2 = shear_velocity(tm, x2, xi_rad, A);
    auto x3 = std::array<double, 2>{x[0] + 0.5 * h * k2[0], x[1] + 0.5 * h * k2[1]};
    auto k3 = shear_velocity(tm, x3, xi_rad, A);
    auto x4 = std::array<double, 2>{x[0] + h * k3[0], x[1] + h * k3[1]};
    auto k4 = shear_velocity(t + h - 1e-12, x4, xi_rad, A);
    x[0] += h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
    x[1] += h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
    t += h;
  }
  return x;
}

// Distance on R/2pi between values given as plain radians.
inline double circ_dist(double a, double b) {
  double d = std::fmod(std::fabs(a - b), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

// Least squares fit y = a + b x; returns {intercept, slope, r_squared}.
inline std::array<double, 3> linear_fit(const std::vector<double>& xs,
                                        const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double intercept = (sy - slope * sx) / n;
  double ss_res = 0, ss_tot = 0, ybar = sy / n;
  for (size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (intercept + slope * xs[i]);
    ss_res += e * e;
    ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
  }
  double r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return {intercept, slope, r2};
}

}  // namespace oracles
