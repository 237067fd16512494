#pragma once

// Generating curves z(u) of invariant surfaces with derivatives up to order 3.

#include <functional>
#include <string_view>
#include <utility>

namespace isogeo {

enum class ProfileFamily {
  QuadraticLog,  // z0 + z1 u^2 + z2 ln u
  Quadratic,     // z0 + z1 u + z2 u^2
  BesselCombo,   // z0 + z1 J0(sqrt(l) u) + z2 Y0(sqrt(l) u), l > 0
                 // z0 + z1 I0(sqrt(-l) u) + z2 K0(sqrt(-l) u), l < 0
  TrigCombo,     // z0 + z1 cos(sqrt(L) u) + z2 sin(sqrt(L) u), L > 0
  HyperCombo,    // z0 + z1 cosh(sqrt(-L) u) + z2 sinh(sqrt(-L) u), L < 0
  Numeric,       // user callable, derivatives by finite differences
};

std::string_view to_string(ProfileFamily family);

struct ProfileValues {
  double z = 0.0;
  double dz = 0.0;
  double d2z = 0.0;
  double d3z = 0.0;
};

struct ProfileSpec {
  ProfileFamily family = ProfileFamily::Quadratic;
  double z0 = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;
  /// Separation constant for BesselCombo, TrigCombo and HyperCombo.
  double lambda = 0.0;
  std::function<double(double)> numeric;
};

class ProfileCurve {
 public:
  ProfileValues eval(double u) const;
  double operator()(double u) const { return eval(u).z; }

  /// Copy with k*u^3 added (exact derivatives included).
  ProfileCurve with_cubic(double k) const;

  ProfileFamily family() const { return spec_.family; }
  const ProfileSpec& spec() const { return spec_; }
  double cubic() const { return cubic_; }

  /// Log and Bessel members are only defined for u > 0.
  bool requires_positive_u() const;

 private:
  friend ProfileCurve make_profile(const ProfileSpec& spec);
  explicit ProfileCurve(ProfileSpec spec) : spec_(std::move(spec)) {}

  ProfileSpec spec_;
  double cubic_ = 0.0;
};

/// Validates the spec; throws Error(InvalidFamilyParams) on a zero Bessel
/// constant, a trig constant <= 0, a hyperbolic constant >= 0, non-finite
/// coefficients or a missing numeric callable.
ProfileCurve make_profile(const ProfileSpec& spec);

ProfileCurve quadratic_log_profile(double z0, double z1, double z2);
ProfileCurve quadratic_profile(double z0, double z1, double z2);
ProfileCurve bessel_profile(double z0, double z1, double z2, double lambda);
ProfileCurve trig_profile(double z0, double z1, double z2, double big_lambda);
ProfileCurve hyper_profile(double z0, double z1, double z2, double big_lambda);
ProfileCurve numeric_profile(std::function<double(double)> z);
inline ProfileCurve constant_profile(double z0) { return quadratic_profile(z0, 0.0, 0.0); }

}  // namespace isogeo
