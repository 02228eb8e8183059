#include "shearmix/flow.hpp"

#include <cmath>

#include "shearmix/parallel.hpp"

namespace shearmix {

namespace {

void check_t_unit(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("shear: t must lie in [0, 1]");
  }
}

}  // namespace

TorusPoint horizontal_shear(const TorusPoint& x, TorusAngle zeta, const FlowParams& params,
                            double t) {
  validate(params);
  check_t_unit(t);
  double x1 = x.x1.half_turns();
  detail::shear_h_ht(x1, x.x2.half_turns(), params.amplitude / kPi, zeta.half_turns(), t);
  return TorusPoint{TorusAngle::from_half_turns(x1), x.x2};
}

TorusPoint vertical_shear(const TorusPoint& x, TorusAngle zeta, const FlowParams& params,
                          double t) {
  validate(params);
  check_t_unit(t);
  double x2 = x.x2.half_turns();
  detail::shear_v_ht(x2, x.x1.half_turns(), params.amplitude / kPi, zeta.half_turns(), t);
  return TorusPoint{x.x1, TorusAngle::from_half_turns(x2)};
}

TorusPoint flow_point(const TorusPoint& x, const ShiftSequence& xi, const FlowParams& params,
                      double t) {
  validate(params);
  if (!(t >= 0.0 && t <= static_cast<double>(xi.size()))) {
    throw std::invalid_argument("flow_point: t must lie in [0, len(xi)]");
  }
  const double aht = params.amplitude / kPi;
  const auto full = static_cast<size_t>(std::floor(t));
  const double partial = t - std::floor(t);
  double w1 = x.x1.half_turns(), w2 = x.x2.half_turns();
  for (size_t s = 0; s < full; ++s) {
    const double z = xi[s].half_turns();
    if (s % 2 == 0) detail::shear_h_ht(w1, w2, aht, z);
    else            detail::shear_v_ht(w2, w1, aht, z);
  }
  if (partial > 0.0) {
    const double z = xi[full].half_turns();
    if (full % 2 == 0) detail::shear_h_ht(w1, w2, aht, z, partial);
    else               detail::shear_v_ht(w2, w1, aht, z, partial);
  }
  return make_point_ht(w1, w2);
}

TorusPoint inverse_flow_point(const TorusPoint& x, const ShiftSequence& xi,
                              const FlowParams& params) {
  validate(params);
  const double aht = -params.amplitude / kPi;
  double w1 = x.x1.half_turns(), w2 = x.x2.half_turns();
  for (size_t k = xi.size(); k-- > 0;) {
    const double z = xi[k].half_turns();
    if (k % 2 == 0) detail::shear_h_ht(w1, w2, aht, z);
    else            detail::shear_v_ht(w2, w1, aht, z);
  }
  return make_point_ht(w1, w2);
}

PairState flow_pair(const PairState& z, const ShiftSequence& xi, const FlowParams& params) {
  validate(params);
  if (xi.size() % 2 != 0) {
    throw std::invalid_argument("flow_pair: shift sequence must have even length");
  }
  double w[4] = {z.x.x1.half_turns(), z.x.x2.half_turns(),
                 z.y.x1.half_turns(), z.y.x2.half_turns()};
  std::vector<double> sh;
  detail::shifts_to_ht(xi, sh);
  detail::flow_pair_inplace_ht(w, sh, params.amplitude / kPi);
  return PairState{make_point_ht(w[0], w[1]), make_point_ht(w[2], w[3])};
}

ShiftSequence fixed_point_shifts(const PairState& z, int periods, double tol) {
  if (periods != 1 && periods != 2) {
    throw std::invalid_argument("fixed_point_shifts: periods must be 1 or 2");
  }
  if (residual_from_R(z) > tol) {
    throw std::domain_error("fixed_point_shifts: pair is not in R within tolerance");
  }
  ShiftSequence xi;
  for (int k = 0; k < periods; ++k) {
    xi.push_back(z.x.x2);
    xi.push_back(z.x.x1);
  }
  return xi;
}

ShiftSequence sample_shifts(std::uint64_t rng_seed, int n) {
  if (n < 1) throw std::invalid_argument("sample_shifts: n must be >= 1");
  rng::Stream st(rng_seed);
  ShiftSequence xi;
  xi.reserve(2 * static_cast<size_t>(n));
  for (int i = 0; i < 2 * n; ++i) {
    xi.push_back(TorusAngle::from_half_turns(st.next_half_turns()));
  }
  return xi;
}

KernelEstimate kernel_mc(const PairState& z, int n,
                         const std::function<bool(const PairState&)>& event,
                         std::int64_t samples, std::uint64_t rng_seed, const FlowParams& params) {
  validate(params);
  if (samples < 1) throw std::invalid_argument("kernel_mc: samples must be >= 1");
  if (n < 0) throw std::invalid_argument("kernel_mc: n must be >= 0");

  const double aht = params.amplitude / kPi;
  const double w0[4] = {z.x.x1.half_turns(), z.x.x2.half_turns(),
                        z.y.x1.half_turns(), z.y.x2.half_turns()};

  std::vector<std::uint8_t> hit(static_cast<size_t>(samples));
  par::parallel_for(samples, [&](std::int64_t i) {
    rng::Stream st(rng_seed, static_cast<std::uint64_t>(i));
    double w[4] = {w0[0], w0[1], w0[2], w0[3]};
    for (int k = 0; k < n; ++k) {
      const double zh = st.next_half_turns();
      detail::shear_h_ht(w[0], w[1], aht, zh);
      detail::shear_h_ht(w[2], w[3], aht, zh);
      const double zv = st.next_half_turns();
      detail::shear_v_ht(w[1], w[0], aht, zv);
      detail::shear_v_ht(w[3], w[2], aht, zv);
    }
    const PairState img{make_point_ht(w[0], w[1]), make_point_ht(w[2], w[3])};
    hit[static_cast<size_t>(i)] = event(img) ? 1 : 0;
  });

  std::int64_t count = 0;
  for (std::uint8_t h : hit) count += h;
  const double p = static_cast<double>(count) / static_cast<double>(samples);
  const double hw =
      std::min(1.0, 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)));
  return KernelEstimate{p, hw, samples};
}

}  // namespace shearmix
