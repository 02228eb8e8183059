#include "shearmix/torus.hpp"

namespace shearmix {

std::vector<TorusPoint> segment_cover(const TorusPoint& from, const TorusPoint& to, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("segment_cover: r must be positive and finite");
  }
  // Lift `to` to the representative nearest `from` per coordinate,
  // ties toward the positive direction.
  const double d1 = signed_gap_half_turns(from.x1, to.x1);
  const double d2 = signed_gap_half_turns(from.x2, to.x2);
  const double len = std::hypot(d1, d2) * kPi;  // radians

  std::vector<TorusPoint> centers;
  if (len == 0.0) {
    centers.push_back(from);
    return centers;
  }
  const long long hops = static_cast<long long>(std::ceil(len / r));
  const double u1 = d1 / (len / kPi);  // unit direction in half-turn coords
  const double u2 = d2 / (len / kPi);
  const double r_ht = r / kPi;
  centers.reserve(static_cast<size_t>(hops) + 1);
  for (long long k = 0; k <= hops; ++k) {
    const double s = static_cast<double>(k) * r_ht;
    centers.push_back(make_point_ht(from.x1.half_turns() + s * u1,
                                    from.x2.half_turns() + s * u2));
  }
  return centers;
}

}  // namespace shearmix
