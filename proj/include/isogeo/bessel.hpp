#pragma once

// Cylindrical Bessel functions of orders 0 and 1 for real positive arguments.
//
// Evaluation regions (x = argument):
//   J, Y : power series for x <= 8, Miller backward recurrence plus the
//          Neumann expansion of Y for 8 < x <= 25, Hankel asymptotics beyond.
//   I    : power series for x <= 25, asymptotic expansion beyond.
//   K    : power series for x <= 2, trapezoidal rule on
//          K_n(x) = int_0^inf exp(-x cosh s) cosh(n s) ds for 2 < x <= 25,
//          asymptotic expansion beyond.

#include <vector>

namespace isogeo::bessel {

enum class Family { J, Y, I, K };
enum class Order { Zero = 0, One = 1 };

struct Kind {
  Family family;
  Order order;
};

/// Throws Error(SingularArgument) for Y/K at x <= 0 and Error(DomainError)
/// for J/I at x < 0.
double eval(Kind kind, double x);

/// Derivative of the order-0 function of `family`:
/// J0' = -J1, Y0' = -Y1, I0' = I1, K0' = -K1.
double deriv(Family family, double x);

/// Second and third derivatives of the order-0 function, obtained from the
/// Bessel equation.
double deriv2(Family family, double x);
double deriv3(Family family, double x);

/// First n positive zeros of J0 in increasing order. McMahon initial guess,
/// Newton refinement. Throws Error(DomainError) if n < 1.
std::vector<double> j0_zeros(int n);

inline double j0(double x) { return eval({Family::J, Order::Zero}, x); }
inline double j1(double x) { return eval({Family::J, Order::One}, x); }
inline double y0(double x) { return eval({Family::Y, Order::Zero}, x); }
inline double y1(double x) { return eval({Family::Y, Order::One}, x); }
inline double i0(double x) { return eval({Family::I, Order::Zero}, x); }
inline double i1(double x) { return eval({Family::I, Order::One}, x); }
inline double k0(double x) { return eval({Family::K, Order::Zero}, x); }
inline double k1(double x) { return eval({Family::K, Order::One}, x); }

}  // namespace isogeo::bessel
