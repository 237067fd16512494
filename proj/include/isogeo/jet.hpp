#pragma once

#include <array>
#include <cmath>

namespace isogeo {

// Value of a function of (u, t) together with its gradient and Hessian.
// hess is stored as {uu, ut, tt}.
struct Jet2 {
  double value = 0.0;
  std::array<double, 2> grad{};
  std::array<double, 3> hess{};

  static constexpr Jet2 constant(double v) { return {v, {0.0, 0.0}, {0.0, 0.0, 0.0}}; }

  constexpr Jet2 operator-() const {
    return {-value, {-grad[0], -grad[1]}, {-hess[0], -hess[1], -hess[2]}};
  }
};

constexpr Jet2 operator+(const Jet2& f, const Jet2& g) {
  return {f.value + g.value,
          {f.grad[0] + g.grad[0], f.grad[1] + g.grad[1]},
          {f.hess[0] + g.hess[0], f.hess[1] + g.hess[1], f.hess[2] + g.hess[2]}};
}

constexpr Jet2 operator-(const Jet2& f, const Jet2& g) { return f + (-g); }

constexpr Jet2 operator*(double s, const Jet2& f) {
  return {s * f.value,
          {s * f.grad[0], s * f.grad[1]},
          {s * f.hess[0], s * f.hess[1], s * f.hess[2]}};
}

constexpr Jet2 operator+(const Jet2& f, double s) {
  Jet2 r = f;
  r.value += s;
  return r;
}

constexpr Jet2 operator*(const Jet2& f, const Jet2& g) {
  return {f.value * g.value,
          {f.grad[0] * g.value + f.value * g.grad[0], f.grad[1] * g.value + f.value * g.grad[1]},
          {f.hess[0] * g.value + 2.0 * f.grad[0] * g.grad[0] + f.value * g.hess[0],
           f.hess[1] * g.value + f.grad[0] * g.grad[1] + f.grad[1] * g.grad[0] +
               f.value * g.hess[1],
           f.hess[2] * g.value + 2.0 * f.grad[1] * g.grad[1] + f.value * g.hess[2]}};
}

// Applies a scalar function with derivatives (d0, d1, d2) at f.value.
constexpr Jet2 compose(const Jet2& f, double d0, double d1, double d2) {
  return {d0,
          {d1 * f.grad[0], d1 * f.grad[1]},
          {d2 * f.grad[0] * f.grad[0] + d1 * f.hess[0],
           d2 * f.grad[0] * f.grad[1] + d1 * f.hess[1],
           d2 * f.grad[1] * f.grad[1] + d1 * f.hess[2]}};
}

inline Jet2 reciprocal(const Jet2& f) {
  const double r = 1.0 / f.value;
  return compose(f, r, -r * r, 2.0 * r * r * r);
}

inline Jet2 operator/(const Jet2& f, const Jet2& g) { return f * reciprocal(g); }

inline Jet2 sqrt(const Jet2& f) {
  const double s = std::sqrt(f.value);
  return compose(f, s, 0.5 / s, -0.25 / (s * f.value));
}

}  // namespace isogeo
