#pragma once
// Exact time-1 maps of the randomly shifted alternating sine-shear flow on
// T^2: one-point and two-point flows (forward, inverse, fractional time),
// uniform shift sampling, and Monte Carlo estimation of the two-point
// transition kernel.
//
// Time is counted in shear steps (one shear per unit time); a period is two
// steps, horizontal first. Shift entry 2k drives the horizontal shear of
// period k, entry 2k+1 the vertical one.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "shearmix/rng.hpp"
#include "shearmix/torus.hpp"

namespace shearmix {

struct FlowParams {
  double amplitude = 1.0;  // A > 0
};

inline void validate(const FlowParams& p) {
  if (!(p.amplitude > 0.0) || !std::isfinite(p.amplitude)) {
    throw std::invalid_argument("FlowParams: amplitude must be positive and finite");
  }
}

using ShiftSequence = std::vector<TorusAngle>;

/// Monte Carlo estimate of a transition probability.
struct KernelEstimate {
  double probability = 0.0;
  double half_width = 0.0;  // 95% binomial confidence half-width
  std::int64_t samples = 0;
};

namespace detail {

// In-place shear steps on half-turn coordinates; aht = amplitude / pi.
inline void shear_h_ht(double& x1, double x2, double aht, double zht, double t = 1.0) {
  x1 = wrap_half_turns(x1 + t * aht * sinpi(x2 - zht));
}
inline void shear_v_ht(double& x2, double x1, double aht, double zht, double t = 1.0) {
  x2 = wrap_half_turns(x2 + t * aht * sinpi(x1 - zht));
}

// Integer-time two-point flow on w = (x1, x2, y1, y2), half-turn coords.
inline void flow_pair_inplace_ht(double w[4], std::span<const double> shifts_ht, double aht) {
  for (size_t s = 0; s < shifts_ht.size(); ++s) {
    const double z = shifts_ht[s];
    if (s % 2 == 0) {
      shear_h_ht(w[0], w[1], aht, z);
      shear_h_ht(w[2], w[3], aht, z);
    } else {
      shear_v_ht(w[1], w[0], aht, z);
      shear_v_ht(w[3], w[2], aht, z);
    }
  }
}

inline void shifts_to_ht(const ShiftSequence& xi, std::vector<double>& out) {
  out.resize(xi.size());
  for (size_t i = 0; i < xi.size(); ++i) out[i] = xi[i].half_turns();
}

}  // namespace detail

/// Exact time-t horizontal shear: (x1 + t A sin(x2 - zeta), x2).
TorusPoint horizontal_shear(const TorusPoint& x, TorusAngle zeta, const FlowParams& params,
                            double t = 1.0);

/// Exact time-t vertical shear: (x1, x2 + t A sin(x1 - zeta)).
TorusPoint vertical_shear(const TorusPoint& x, TorusAngle zeta, const FlowParams& params,
                          double t = 1.0);

/// Flow to time t in [0, len(xi)]: floor(t) full shears (alternating,
/// horizontal first) plus one partial shear of duration t - floor(t).
TorusPoint flow_point(const TorusPoint& x, const ShiftSequence& xi, const FlowParams& params,
                      double t);

/// Exact inverse of the full shear composition (reverse order, negated
/// amplitude).
TorusPoint inverse_flow_point(const TorusPoint& x, const ShiftSequence& xi,
                              const FlowParams& params);

/// Componentwise two-point flow at integer time len(xi). Even length
/// required; an empty sequence is the identity.
PairState flow_pair(const PairState& z, const ShiftSequence& xi, const FlowParams& params);

/// The periodic controls xi^1(z) = (x2, x1) / xi^2(z) = (x2, x1, x2, x1) that
/// fix z on the set R = {y - x = (pi, pi)}. periods in {1, 2}; rejects z
/// whose displacement is farther than tol (radians) from (pi, pi).
ShiftSequence fixed_point_shifts(const PairState& z, int periods, double tol = 1e-9);

/// 2n i.i.d. uniform shifts on [0, 2pi); deterministic in the seed.
ShiftSequence sample_shifts(std::uint64_t rng_seed, int n);

/// Monte Carlo frequency over i.i.d. shift draws of `event` after n periods.
/// Sample i uses the counter-based stream (rng_seed, i), so the estimate is
/// bit-identical for any worker count.
KernelEstimate kernel_mc(const PairState& z, int n,
                         const std::function<bool(const PairState&)>& event,
                         std::int64_t samples, std::uint64_t rng_seed, const FlowParams& params);

}  // namespace shearmix
