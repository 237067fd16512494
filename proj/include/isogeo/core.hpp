#pragma once

// Ambient model of simply isotropic 3-space: affine points and vectors in R^3
// with the degenerate inner product <X,Y> = x1*y1 + x2*y2.

#include <array>

namespace isogeo {

struct IsoVector {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  /// True iff the top view vanishes exactly (x1 = x2 = 0).
  constexpr bool is_isotropic() const { return x1 == 0.0 && x2 == 0.0; }

  constexpr IsoVector& operator+=(const IsoVector& o) {
    x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr IsoVector& operator-=(const IsoVector& o) {
    x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr IsoVector& operator*=(double s) {
    x1 *= s; x2 *= s; x3 *= s;
    return *this;
  }

  friend constexpr IsoVector operator+(IsoVector a, const IsoVector& b) { return a += b; }
  friend constexpr IsoVector operator-(IsoVector a, const IsoVector& b) { return a -= b; }
  friend constexpr IsoVector operator-(const IsoVector& a) { return {-a.x1, -a.x2, -a.x3}; }
  friend constexpr IsoVector operator*(double s, IsoVector a) { return a *= s; }
  friend constexpr IsoVector operator*(IsoVector a, double s) { return a *= s; }
  friend constexpr bool operator==(const IsoVector&, const IsoVector&) = default;
};

struct IsoPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  /// Projection onto the xy-plane.
  constexpr IsoPoint top_view() const { return {x, y, 0.0}; }

  friend constexpr IsoVector operator-(const IsoPoint& p, const IsoPoint& q) {
    return {p.x - q.x, p.y - q.y, p.z - q.z};
  }
  friend constexpr IsoPoint operator+(const IsoPoint& p, const IsoVector& v) {
    return {p.x + v.x1, p.y + v.x2, p.z + v.x3};
  }
  friend constexpr bool operator==(const IsoPoint&, const IsoPoint&) = default;
};

/// The metric isotropic normal (0,0,1).
inline constexpr IsoVector kIsotropicNormal{0.0, 0.0, 1.0};

constexpr double iso_inner(const IsoVector& a, const IsoVector& b) {
  return a.x1 * b.x1 + a.x2 * b.x2;
}

// Euclidean products of the underlying R^3; the minimal normal and h_ij are
// defined through them.
constexpr double euclid_dot(const IsoVector& a, const IsoVector& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}
constexpr IsoVector cross(const IsoVector& a, const IsoVector& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

/// Euclidean distance of the top views.
double iso_distance(const IsoPoint& p, const IsoPoint& q);

/// |z_q - z_p| for parallel points (identical top views, compared exactly).
/// Throws Error(Undefined) otherwise.
double iso_codistance(const IsoPoint& p, const IsoPoint& q);

/// Parameters of the six-parameter motion group
///   x' = a + x cos(phi) - y sin(phi)
///   y' = b + x sin(phi) + y cos(phi)
///   z' = c + c1 x + c2 y + z
struct MotionParams {
  double phi = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

IsoPoint apply_motion(const MotionParams& m, const IsoPoint& p);

/// Linear part of the motion, acting on vectors.
IsoVector apply_linear(const MotionParams& m, const IsoVector& v);

}  // namespace isogeo
