#pragma once
// Canonical geometry on T = R/2piZ, T^2, and the off-diagonal pair space
// T^{2,(2)}.
//
// Angles are stored internally in half-turn units (angle/pi, canonical in
// [0,2)). Half-integer phases are exact doubles in this unit, so identities
// that hinge on sin(pi) = 0 or cos(pi/2) = 0 hold exactly instead of to
// ~1e-16 * amplification. The observable API is radians in [0, 2pi).
// Distances are always reported in radians.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace shearmix {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Exact reduction into [0,2). fmod is exact; the only correction needed is
// that (-tiny) + 2 can round up to 2.
inline double wrap_half_turns(double t) {
  double s = std::fmod(t, 2.0);
  if (s < 0.0) s += 2.0;
  if (s >= 2.0) s = 0.0;
  return s;
}

// sin(pi*t) and cos(pi*t) with exact values at half-integer t.
// Branch offsets are exact by Sterbenz subtraction.
inline double sinpi(double t) {
  double s = wrap_half_turns(t);
  if (s < 0.5) return std::sin(kPi * s);
  if (s < 1.0) return std::cos(kPi * (s - 0.5));
  if (s < 1.5) return -std::sin(kPi * (s - 1.0));
  return -std::cos(kPi * (s - 1.5));
}

inline double cospi(double t) {
  double s = wrap_half_turns(t);
  if (s < 0.5) return std::cos(kPi * s);
  if (s < 1.0) return -std::sin(kPi * (s - 0.5));
  if (s < 1.5) return -std::cos(kPi * (s - 1.0));
  return std::sin(kPi * (s - 1.5));
}

/// Point of T = R/2piZ, canonical representative in [0, 2pi).
class TorusAngle {
 public:
  TorusAngle() = default;

  static TorusAngle from_radians(double a) {
    if (!std::isfinite(a)) throw std::invalid_argument("TorusAngle: non-finite angle");
    return TorusAngle(wrap_half_turns(a / kPi));
  }
  static TorusAngle from_half_turns(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("TorusAngle: non-finite angle");
    return TorusAngle(wrap_half_turns(t));
  }

  double radians() const { return ht_ * kPi; }      // in [0, 2pi)
  double half_turns() const { return ht_; }          // in [0, 2)

  friend TorusAngle operator+(TorusAngle a, TorusAngle b) {
    return TorusAngle(wrap_half_turns(a.ht_ + b.ht_));
  }
  friend TorusAngle operator-(TorusAngle a, TorusAngle b) {
    return TorusAngle(wrap_half_turns(a.ht_ - b.ht_));
  }
  friend bool operator==(TorusAngle a, TorusAngle b) { return a.ht_ == b.ht_; }

 private:
  explicit TorusAngle(double ht) : ht_(ht) {}
  double ht_ = 0.0;
};

/// wrap(a): canonical representative of a radian angle in [0, 2pi).
inline TorusAngle wrap(double radians) { return TorusAngle::from_radians(radians); }

/// Geodesic distance on T, in [0, pi] (radians).
inline double torus_dist(TorusAngle a, TorusAngle b) {
  double d = std::fabs(a.half_turns() - b.half_turns());  // [0, 2)
  if (d > 1.0) d = 2.0 - d;                                // exact (Sterbenz)
  return d * kPi;
}

/// Signed shortest displacement from a to b in half-turns, in (-1, 1].
/// Ties (antipodal) resolve toward +1.
inline double signed_gap_half_turns(TorusAngle from, TorusAngle to) {
  double d = wrap_half_turns(to.half_turns() - from.half_turns());  // [0, 2)
  if (d > 1.0) d -= 2.0;                                            // (-1, 1]
  return d;
}

struct TorusPoint {
  TorusAngle x1, x2;
};

inline TorusPoint make_point(double a1_rad, double a2_rad) {
  return TorusPoint{wrap(a1_rad), wrap(a2_rad)};
}
inline TorusPoint make_point_ht(double t1, double t2) {
  return TorusPoint{TorusAngle::from_half_turns(t1), TorusAngle::from_half_turns(t2)};
}

/// Off-diagonal pair z = (x, y), x != y.
struct PairState {
  TorusPoint x, y;
};

inline double point_dist_inf(const TorusPoint& a, const TorusPoint& b) {
  return std::max(torus_dist(a.x1, b.x1), torus_dist(a.x2, b.x2));
}

/// Pair separation |x - y|_inf in radians (distance to the diagonal).
inline double pair_separation_inf(const PairState& z) {
  return point_dist_inf(z.x, z.y);
}

/// l^inf distance between two pair states: max over the four coordinates.
inline double linf_dist(const PairState& z1, const PairState& z2) {
  return std::max(point_dist_inf(z1.x, z2.x), point_dist_inf(z1.y, z2.y));
}

/// Membership in the open l^inf ball B_inf(center, r).
inline bool in_ball_inf(const PairState& center, double r, const PairState& z) {
  if (!(r > 0.0)) throw std::invalid_argument("in_ball_inf: r must be > 0");
  return linf_dist(center, z) < r;
}

/// Displacement wrap(y - x) of a pair, componentwise.
inline TorusPoint pair_displacement(const PairState& z) {
  return TorusPoint{z.y.x1 - z.x.x1, z.y.x2 - z.x.x2};
}

/// l^inf distance (radians) of the displacement wrap(y-x) from (pi, pi);
/// zero exactly on the set R.
inline double residual_from_R(const PairState& z) {
  double d1 = wrap_half_turns(z.y.x1.half_turns() - z.x.x1.half_turns());
  double d2 = wrap_half_turns(z.y.x2.half_turns() - z.x.x2.half_turns());
  return std::max(std::fabs(d1 - 1.0), std::fabs(d2 - 1.0)) * kPi;
}

/// Ball centers w_1 = from, spaced exactly r (torus l^2 arc length, radians)
/// along the minimal geodesic segment toward `to`; the final center lands
/// within r of `to`. Count = ceil(len/r) + 1; a single center when from == to.
std::vector<TorusPoint> segment_cover(const TorusPoint& from, const TorusPoint& to, double r);

}  // namespace shearmix
