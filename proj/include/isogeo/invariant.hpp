#pragma once

// Helicoidal surfaces R(u,t) = (u cos t, u sin t, z(u) + c t) and parabolic
// revolution surfaces
//   P(u,t) = (a t + u, b t, c t + (a c1 + b c2) t^2 / 2 + c1 u t + z(u)),
// with their closed-form geometry.

#include <numbers>
#include <optional>
#include <string_view>

#include "isogeo/core.hpp"
#include "isogeo/jet.hpp"
#include "isogeo/profile.hpp"
#include "isogeo/surface.hpp"

namespace isogeo {

inline constexpr Domain kDefaultHelicoidalDomain{0.5, 3.0, 0.0, 4.0 * std::numbers::pi};
inline constexpr Domain kDefaultParabolicDomain{0.5, 3.0, -1.0, 1.0};

/// Helicoidal evaluations closer than this to the axis u = 0 throw
/// Error(NearSingular).
inline constexpr double kNearAxisGuard = 1e-4;

/// Second-order operator  du f_u + dt f_t + duu f_uu + dut f_ut + dtt f_tt.
struct LaplaceCoefficients {
  double du = 0.0;
  double dt = 0.0;
  double duu = 0.0;
  double dut = 0.0;
  double dtt = 0.0;

  double apply(const Jet2& f) const {
    return du * f.grad[0] + dt * f.grad[1] + duu * f.hess[0] + dut * f.hess[1] + dtt * f.hess[2];
  }
  friend bool operator==(const LaplaceCoefficients&, const LaplaceCoefficients&) = default;
};

struct InvariantClosedForms {
  FundamentalForms forms;
  double K = 0.0;
  double H = 0.0;
  IsoVector minimal_normal;
  IsoVector gauss_map;
  LaplaceCoefficients laplacian;
  IsoVector lap_minimal_normal;
  IsoVector lap_gauss_map;
};

class HelicoidalSurface {
 public:
  /// Throws Error(InvalidFamilyParams) unless 0 < u_min < u_max and
  /// t_min < t_max.
  HelicoidalSurface(double c, ProfileCurve profile, Domain domain = kDefaultHelicoidalDomain);

  double c() const { return c_; }
  const ProfileCurve& profile() const { return profile_; }
  const Domain& domain() const { return domain_; }
  bool is_rotational() const { return c_ == 0.0; }

  IsoPoint position(ParamPoint p) const;
  ParametricSurface parametric(DerivativeMode mode = DerivativeMode::ClosedForm) const;

  /// psi_s with R(u, t + s) = psi_s(R(u, t)).
  MotionParams subgroup_motion(double s) const;

 private:
  double c_;
  ProfileCurve profile_;
  Domain domain_;
};

struct ParabolicParams {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  /// a c1 + b c2, the t^2 coefficient times two and h_22.
  double k() const { return a * c1 + b * c2; }
};

enum class ParabolicSubfamily { Translation, WarpedTranslation, General };
std::string_view to_string(ParabolicSubfamily s);

enum class QuadricType { EllipticParaboloid, ParabolicCylinder, HyperbolicParaboloid, Plane };
std::string_view to_string(QuadricType q);

class ParabolicRevolutionSurface {
 public:
  /// Throws Error(InvalidFamilyParams) unless b > 0 and the domain is a
  /// non-empty rectangle.
  ParabolicRevolutionSurface(ParabolicParams params, ProfileCurve profile,
                             Domain domain = kDefaultParabolicDomain);

  const ParabolicParams& params() const { return params_; }
  const ProfileCurve& profile() const { return profile_; }
  const Domain& domain() const { return domain_; }

  IsoPoint position(ParamPoint p) const;
  ParametricSurface parametric(DerivativeMode mode = DerivativeMode::ClosedForm) const;

  /// psi_s with P(u, t + s) = psi_s(P(u, t)).
  MotionParams subgroup_motion(double s) const;

  /// Exact parameter comparison.
  ParabolicSubfamily subfamily() const;

  /// For quadratic profiles the surface is the quadric
  /// z + z0 = z2 x^2 + 2 alpha x y + beta y^2 + ...; classified by the sign of
  /// z2 beta - alpha^2. Empty for other profile families.
  std::optional<QuadricType> quadric_type() const;

 private:
  ParabolicParams params_;
  ProfileCurve profile_;
  Domain domain_;
};

/// Throw Error(DomainError) outside the surface domain and, for helicoidal
/// surfaces, Error(NearSingular) within kNearAxisGuard of the axis.
InvariantClosedForms helicoidal_closed_forms(const HelicoidalSurface& s, ParamPoint p);
InvariantClosedForms parabolic_closed_forms(const ParabolicRevolutionSurface& s, ParamPoint p);

}  // namespace isogeo
