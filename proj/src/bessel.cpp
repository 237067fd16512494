#include "isogeo/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "isogeo/errors.hpp"

namespace isogeo::bessel {
namespace {

constexpr double kEulerGamma = 0.5772156649015329;
constexpr double kPi = std::numbers::pi;
constexpr double kSeriesLimitJY = 8.0;
constexpr double kRecurrenceLimitJY = 25.0;
constexpr double kSeriesLimitI = 25.0;
constexpr double kSeriesLimitK = 2.0;
constexpr double kAsymptoticStartK = 25.0;
constexpr double kTermFloor = 1e-18;

// --- power series -----------------------------------------------------------

// sum_k s^k q^k / (k! (k+n)!) with s = -1 for J and +1 for I.
double power_series(double x, int n, double sign) {
  const double q = 0.25 * x * x;
  double term = n == 0 ? 1.0 : 0.5 * x;
  double sum = term;
  double abs_sum = std::abs(term);
  for (int k = 1; k < 400; ++k) {
    term *= sign * q / (static_cast<double>(k) * static_cast<double>(k + n));
    sum += term;
    abs_sum += std::abs(term);
    if (std::abs(term) < kTermFloor * abs_sum) break;
  }
  return sum;
}

// Logarithmic companions of Y and K near the origin.
double y0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double harmonic = 0.0;
  double tail = 0.0;
  double abs_tail = 0.0;
  for (int k = 1; k < 400; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    const double contrib = -term * harmonic;
    tail += contrib;
    abs_tail += std::abs(contrib);
    if (std::abs(contrib) < kTermFloor * abs_tail) break;
  }
  return (2.0 / kPi) * ((std::log(0.5 * x) + kEulerGamma) * power_series(x, 0, -1.0) + tail);
}

double y1_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;  // (-q)^k / (k! (k+1)!)
  double h_k = 0.0;   // H_k
  double sum = 2.0 * (-kEulerGamma) + 1.0;  // psi(1) + psi(2)
  double abs_sum = std::abs(sum);
  for (int k = 1; k < 400; ++k) {
    term *= -q / (static_cast<double>(k) * (k + 1));
    h_k += 1.0 / k;
    const double h_k1 = h_k + 1.0 / (k + 1);
    const double contrib = term * (h_k + h_k1 - 2.0 * kEulerGamma);
    sum += contrib;
    abs_sum += std::abs(contrib);
    if (std::abs(contrib) < kTermFloor * abs_sum) break;
  }
  return -2.0 / (kPi * x) + (2.0 / kPi) * std::log(0.5 * x) * power_series(x, 1, -1.0) -
         (0.5 * x / kPi) * sum;
}

double k0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double harmonic = 0.0;
  double tail = 0.0;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    const double contrib = term * harmonic;
    tail += contrib;
    if (contrib < kTermFloor * tail) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * power_series(x, 0, 1.0) + tail;
}

double k1_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double h_k = 0.0;
  double sum = 1.0 - 2.0 * kEulerGamma;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<double>(k) * (k + 1));
    h_k += 1.0 / k;
    const double contrib = term * (2.0 * h_k + 1.0 / (k + 1) - 2.0 * kEulerGamma);
    sum += contrib;
    if (std::abs(contrib) < kTermFloor * std::abs(sum)) break;
  }
  return 1.0 / x + std::log(0.5 * x) * power_series(x, 1, 1.0) - 0.25 * x * sum;
}

// --- intermediate region ------------------------------------------------------

struct JYPair {
  double j0, j1, y0, y1;
};

// Miller's backward recurrence normalised by J0 + 2 sum J_2k = 1, then the
// Neumann expansions
//   Y0 = (2/pi)(ln(x/2) + gamma) J0 - (4/pi) sum_k (-1)^k J_2k / k
//   Y1 = -Y0'.
JYPair miller_neumann(double x) {
  int top = static_cast<int>(x + 40.0 + 10.0 * std::cbrt(x));
  if (top % 2 != 0) ++top;
  std::vector<double> jn(static_cast<std::size_t>(top) + 2, 0.0);
  jn[static_cast<std::size_t>(top) + 1] = 0.0;
  jn[static_cast<std::size_t>(top)] = 1e-300;
  for (int k = top; k >= 1; --k) {
    const auto ku = static_cast<std::size_t>(k);
    jn[ku - 1] = (2.0 * k / x) * jn[ku] - jn[ku + 1];
    if (std::abs(jn[ku - 1]) > 1e250) {
      for (std::size_t i = ku - 1; i < jn.size(); ++i) jn[i] *= 1e-250;
    }
  }
  double norm = jn[0];
  for (int k = 2; k <= top; k += 2) norm += 2.0 * jn[static_cast<std::size_t>(k)];
  for (double& v : jn) v /= norm;

  const double log_term = std::log(0.5 * x) + kEulerGamma;
  double s0 = 0.0;
  double s1 = 0.0;
  for (int k = 1; 2 * k + 1 <= top + 1; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const auto even = static_cast<std::size_t>(2 * k);
    s0 += sign * jn[even] / k;
    s1 += sign * (jn[even - 1] - jn[even + 1]) / k;
  }
  JYPair out{};
  out.j0 = jn[0];
  out.j1 = jn[1];
  out.y0 = (2.0 / kPi) * log_term * jn[0] - (4.0 / kPi) * s0;
  out.y1 = -(2.0 / kPi) * (jn[0] / x - log_term * jn[1]) + (2.0 / kPi) * s1;
  return out;
}

double k_trapezoid(double x, int n) {
  constexpr double h = 0.05;
  // e^{-x} factored out; cosh(s) - 1 = 2 sinh^2(s/2).
  double sum = 0.5;
  for (int j = 1; j < 100000; ++j) {
    const double s = j * h;
    const double sh = std::sinh(0.5 * s);
    const double expo = 2.0 * x * sh * sh;
    const double weight = n == 0 ? 1.0 : std::cosh(s);
    sum += std::exp(-expo) * weight;
    if (expo - n * s > 60.0) break;
  }
  return h * sum * std::exp(-x);
}

// --- large-argument expansions -----------------------------------------------

// Hankel expansion: returns {P, Q} for order n.
std::pair<double, double> hankel_pq(double x, int n) {
  const double mu = 4.0 * n * n;
  double p = 1.0;
  double q = 0.0;
  double a = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    a *= (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(a);
    if (mag > prev) break;
    const int r = k % 4;
    if (r == 1) q += a;
    else if (r == 2) p -= a;
    else if (r == 3) q -= a;
    else p += a;
    if (mag < 1e-17) break;
    prev = mag;
  }
  return {p, q};
}

// Returns {J_n, Y_n}.
std::pair<double, double> jy_asymptotic(double x, int n) {
  const auto [p, q] = hankel_pq(x, n);
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double r = 1.0 / std::sqrt(2.0);
  // omega = x - n pi/2 - pi/4
  const double cw = n == 0 ? r * (c + s) : r * (s - c);
  const double sw = n == 0 ? r * (s - c) : -r * (c + s);
  const double amp = std::sqrt(2.0 / (kPi * x));
  return {amp * (p * cw - q * sw), amp * (p * sw + q * cw)};
}

// sum_k (sign)^k a_k(n) / x^k
double ik_asymptotic_sum(double x, int n, double sign) {
  const double mu = 4.0 * n * n;
  double sum = 1.0;
  double a = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    a *= sign * (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(a);
    if (mag > prev) break;
    sum += a;
    if (mag < 1e-17) break;
    prev = mag;
  }
  return sum;
}

void check_argument(Kind kind, double x) {
  if (std::isnan(x)) throw Error(ErrorCode::DomainError, "Bessel argument is NaN");
  const bool singular_at_zero = kind.family == Family::Y || kind.family == Family::K;
  if (singular_at_zero && x <= 0.0) {
    throw Error(ErrorCode::SingularArgument,
                "Y and K Bessel functions require x > 0, got " + std::to_string(x));
  }
  if (x < 0.0) {
    throw Error(ErrorCode::DomainError,
                "J and I Bessel functions require x >= 0, got " + std::to_string(x));
  }
}

}  // namespace

double eval(Kind kind, double x) {
  check_argument(kind, x);
  const int n = static_cast<int>(kind.order);
  switch (kind.family) {
    case Family::J:
      if (x <= kSeriesLimitJY) return power_series(x, n, -1.0);
      if (x <= kRecurrenceLimitJY) {
        const JYPair v = miller_neumann(x);
        return n == 0 ? v.j0 : v.j1;
      }
      return jy_asymptotic(x, n).first;
    case Family::Y:
      if (x <= kSeriesLimitJY) return n == 0 ? y0_series(x) : y1_series(x);
      if (x <= kRecurrenceLimitJY) {
        const JYPair v = miller_neumann(x);
        return n == 0 ? v.y0 : v.y1;
      }
      return jy_asymptotic(x, n).second;
    case Family::I:
      if (x <= kSeriesLimitI) return power_series(x, n, 1.0);
      return std::exp(x) / std::sqrt(2.0 * kPi * x) * ik_asymptotic_sum(x, n, -1.0);
    case Family::K:
      if (x <= kSeriesLimitK) return n == 0 ? k0_series(x) : k1_series(x);
      if (x <= kAsymptoticStartK) return k_trapezoid(x, n);
      return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * ik_asymptotic_sum(x, n, 1.0);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double deriv(Family family, double x) {
  const double v = eval({family, Order::One}, x);
  return family == Family::I ? v : -v;
}

double deriv2(Family family, double x) {
  const double f = eval({family, Order::Zero}, x);
  const double d = deriv(family, x);
  const bool modified = family == Family::I || family == Family::K;
  return -d / x + (modified ? f : -f);
}

double deriv3(Family family, double x) {
  const double f = eval({family, Order::Zero}, x);
  const double d = deriv(family, x);
  const bool modified = family == Family::I || family == Family::K;
  return modified ? 2.0 * d / (x * x) - f / x + d : 2.0 * d / (x * x) + f / x - d;
}

std::vector<double> j0_zeros(int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "j0_zeros requires n >= 1");
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    const double beta = (m - 0.25) * kPi;
    const double e = 1.0 / (8.0 * beta);
    double x = beta + e - (124.0 / 3.0) * e * e * e + (120928.0 / 15.0) * std::pow(e, 5);
    for (int it = 0; it < 50; ++it) {
      const double step = j0(x) / j1(x);
      x += step;
      if (std::abs(step) <= 1e-16 * x) break;
    }
    zeros.push_back(x);
  }
  return zeros;
}

}  // namespace isogeo::bessel
