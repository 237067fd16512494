#include "isogeo/core.hpp"

#include <cmath>

#include "isogeo/errors.hpp"

namespace isogeo {

double iso_distance(const IsoPoint& p, const IsoPoint& q) {
  return std::hypot(q.x - p.x, q.y - p.y);
}

double iso_codistance(const IsoPoint& p, const IsoPoint& q) {
  if (p.x != q.x || p.y != q.y) {
    throw Error(ErrorCode::Undefined, "co-distance requires parallel points (equal top views)");
  }
  return std::abs(q.z - p.z);
}

IsoPoint apply_motion(const MotionParams& m, const IsoPoint& p) {
  const double cs = std::cos(m.phi);
  const double sn = std::sin(m.phi);
  return {m.a + p.x * cs - p.y * sn,
          m.b + p.x * sn + p.y * cs,
          m.c + m.c1 * p.x + m.c2 * p.y + p.z};
}

IsoVector apply_linear(const MotionParams& m, const IsoVector& v) {
  const double cs = std::cos(m.phi);
  const double sn = std::sin(m.phi);
  return {v.x1 * cs - v.x2 * sn, v.x1 * sn + v.x2 * cs, m.c1 * v.x1 + m.c2 * v.x2 + v.x3};
}

}  // namespace isogeo
