#pragma once

// Eigen-residual verification of -Δ G^i = λ_i G^i for the Gauss maps of
// invariant surfaces, constructors for the classified solution families, and
// boundary-value spectra.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isogeo/invariant.hpp"
#include "isogeo/surface.hpp"

namespace isogeo {

enum class GaussMapKind { Minimal, Parabolic };
enum class Route { ClosedForm, GenericExact, GenericFiniteDifference };
enum class Verdict { Eigenfunction, NotEigenfunction, Inconclusive, Trivial };
enum class Outcome { Pass, Fail, Inconclusive };

std::string_view to_string(GaussMapKind k);
std::string_view to_string(Route r);
std::string_view to_string(Verdict v);
std::string_view to_string(Outcome o);

inline constexpr double kTrivialityThreshold = 1e-10;
/// Points with |G^i| below this fraction of sup|G^i| are left out of the
/// fitted eigenvalue.
inline constexpr double kFitInclusionFraction = 1e-3;
inline constexpr double kEigenfunctionDeviation = 1e-6;
inline constexpr double kNotEigenfunctionDeviation = 1e-2;
inline constexpr double kExactResidualTolerance = 1e-8;
inline constexpr double kFiniteDifferenceResidualTolerance = 1e-4;

using DeclaredLambdas = std::array<std::optional<double>, 3>;

struct GaussSample {
  IsoVector value;
  IsoVector laplacian;
};
using GaussSampler = std::function<GaussSample(ParamPoint)>;

GaussSampler closed_form_sampler(const HelicoidalSurface& s, GaussMapKind kind);
GaussSampler closed_form_sampler(const ParabolicRevolutionSurface& s, GaussMapKind kind);
/// Uses the surface's own derivative mode.
GaussSampler generic_sampler(const ParametricSurface& s, GaussMapKind kind);

/// Gauss map values and Laplacians on a grid, in grid order.
struct GaussSamples {
  Grid grid;
  std::vector<GaussSample> samples;
};
GaussSamples sample_gauss_map(const GaussSampler& sampler, const Grid& grid);

struct CoordinateReport {
  std::optional<double> declared_lambda;
  /// Mean of -ΔG/G over included points; empty when trivial.
  std::optional<double> fitted_lambda;
  /// max |-ΔG/G - fitted| over included points (0 when trivial).
  double constancy_deviation = 0.0;
  /// sup |ΔG + λ G| at the declared λ, or at the fitted λ if none declared.
  double sup_residual = 0.0;
  double sup_value = 0.0;
  bool trivial = false;
  Verdict verdict = Verdict::Trivial;
  /// Declared coordinates pass when trivial or sup_residual <= tolerance;
  /// undeclared coordinates always pass.
  bool passed = true;
};

CoordinateReport analyse_coordinate(const GaussSamples& data, int coord,
                                    std::optional<double> declared, double tolerance);

/// sup |ΔG^coord + λ G^coord| over the samples.
double coordinate_residual(const GaussSamples& data, int coord, double lambda);

struct EigenResidualReport {
  GaussMapKind kind = GaussMapKind::Minimal;
  Route route = Route::ClosedForm;
  Grid grid;
  double tolerance = kExactResidualTolerance;
  std::array<CoordinateReport, 3> coords;
  Outcome outcome = Outcome::Pass;
};

struct EigenOptions {
  Route route = Route::ClosedForm;
  int nu = 41;
  int nt = 17;
  /// Defaults by route: 1e-8 exact, 1e-4 finite differences.
  std::optional<double> tolerance;
  /// Defaults to the surface domain (inset by the stencil reach for
  /// finite differences).
  std::optional<Domain> box;
};

EigenResidualReport eigen_residual(const HelicoidalSurface& s, GaussMapKind kind,
                                   const DeclaredLambdas& lambdas, const EigenOptions& opt = {});
EigenResidualReport eigen_residual(const ParabolicRevolutionSurface& s, GaussMapKind kind,
                                   const DeclaredLambdas& lambdas, const EigenOptions& opt = {});
/// Generic route only; `opt.route` is ignored and taken from the surface mode.
EigenResidualReport eigen_residual(const ParametricSurface& s, GaussMapKind kind,
                                   const DeclaredLambdas& lambdas, const EigenOptions& opt = {});
EigenResidualReport eigen_residual(const GaussSampler& sampler, GaussMapKind kind, Route route,
                                   const Grid& grid, const DeclaredLambdas& lambdas,
                                   double tolerance);

// --- helicoidal families ---------------------------------------------------------

struct HelicoidalMinimalSpec {
  double c = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double z0 = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;
  Domain domain = kDefaultHelicoidalDomain;
};

struct HelicoidalFamily {
  HelicoidalSurface surface;
  DeclaredLambdas lambdas;
  std::string case_label;
};

/// Case 1: c != 0, λ = (0,0), z = z0 + z1 u^2 + z2 ln u.
/// Case 2a: c = 0, λ = (0,0), same profile.
/// Case 2b: c = 0, λ1 = λ2 != 0, Bessel combination.
/// Case 2c: c = 0, λ1 != λ2, z = z0.
/// Throws Error(InconsistentCase) for c != 0 with nonzero λ, or case 2c with
/// nonzero z1, z2.
HelicoidalFamily helicoidal_minimal_family(const HelicoidalMinimalSpec& spec);

enum class BoundednessRegime { NearAxis, AtInfinity, Both };
std::string_view to_string(BoundednessRegime r);

struct BoundednessSpec {
  BoundednessRegime regime = BoundednessRegime::Both;
  double lambda = 1.0;
  double c = 0.0;
  double z0 = 0.0;
  double z1 = 1.0;
  double z2 = 0.0;
  Domain domain = kDefaultHelicoidalDomain;
};

struct BoundednessProbe {
  /// sup |z(u) - z(1e-2)| for u in [1e-3, 1e-2].
  double near_axis_variation = 0.0;
  /// sup |z(u) - z0| for u in [50, 100].
  double at_infinity_deviation = 0.0;
  bool bounded_near_axis = false;
  bool bounded_at_infinity = false;
};

/// Throws Error(InconsistentCase) when the coefficients contain a member that
/// is unbounded in the requested regime (Y0, K0, ln u near the axis; I0, u^2
/// at infinity; anything but J0 for Both), or c != 0 with λ != 0.
HelicoidalFamily boundedness_family(const BoundednessSpec& spec);
BoundednessProbe probe_boundedness(const ProfileCurve& profile, double z0);

// --- parabolic revolution families ----------------------------------------------------

enum class ParabolicCase { Case1, Case2a, Case2b, Case3, Case4a, Case4b };
std::string_view to_string(ParabolicCase c);

struct ParabolicMinimalSpec {
  ParabolicCase which = ParabolicCase::Case1;
  ParabolicParams params;
  double z0 = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Domain domain = kDefaultParabolicDomain;
};

/// Reparameterisation in which the surface is affine in its second argument:
/// map(v, w + s) = map(v, w) + s * ruling.
struct CylinderChart {
  std::function<IsoPoint(double v, double w)> map;
  IsoVector ruling;
  std::string change;
};

struct ParabolicFamily {
  ParabolicRevolutionSurface surface;
  DeclaredLambdas lambdas;
  std::string case_label;
  std::optional<CylinderChart> cylinder;
};

/// Case 1: λ = (0,0), quadratic z with (c1 != 0 or z non-constant) and
///   (2 a z2 != c1 or a z1 != c).
/// Case 2a: a = c = c1 = c2 = 0, λ1 = 0, λ2 != 0, quadratic z.
/// Case 2b: a != 0, c2 = 0, λ1 = 0, λ2 != 0, z = z0 + (c/a) u + (c1/2a) u^2.
/// Case 3: c1 = 0, λ1 != 0, λ2 = 0, z = z0.
/// Case 4a: a = c = c1 = c2 = 0, λ1, λ2 != 0, trig/hyperbolic in sqrt|λ1| u.
/// Case 4b: a != 0, c = c1 = c2 = 0, λ1 = λ2 = λ != 0, trig/hyperbolic in
///   sqrt|Λ| u with Λ = λ b^2 / (a^2 + b^2).
/// In 2b and 3 the profile is determined, so z1 and z2 must be left 0.
/// Throws Error(InconsistentCase) when the parameters violate the case.
ParabolicFamily parabolic_minimal_family(const ParabolicMinimalSpec& spec);

/// c = c1 = c2 = 0 and z = z0 + A sin(sqrt(Λ) u + φ0) (λ > 0) or
/// z0 + A sinh(sqrt(-Λ) u + φ0) (λ < 0), A = sqrt(2/|λ|); declared (λ, λ, 4λ)
/// for the parabolic Gauss map. Throws Error(InvalidFamilyParams) for λ = 0.
ParabolicFamily lambda3_family(double a, double b, double lambda, double phi0, double z0,
                               Domain domain = kDefaultParabolicDomain);

/// c1 = c2 = 0, z = z0 + z1 u; the parabolic Gauss map is constant, so the
/// only realisable λ3 is 0 (declared (0,0,0)). Throws
/// Error(InconsistentCase) for λ3 != 0.
ParabolicFamily linear_profile_family(double a, double b, double c, double z0, double z1,
                                      double lambda3, Domain domain = kDefaultParabolicDomain);

// --- third coordinate ODE ------------------------------------------------------------

/// -u g'' - g' - λ3 u g - λ3 c^2/(2u) - 2 c^2/u^3 with g = (z'^2 - 1)/2;
/// equals u (ΔG^3 + λ3 G^3) for the helicoidal parabolic Gauss map.
double g3_ode_residual_at(const ProfileCurve& z, double c, double lambda3, double u);
/// Sup norm over the given u values.
double g3_ode_residual(const ProfileCurve& z, double c, double lambda3,
                       const std::vector<double>& u_grid);

// --- spectra ---------------------------------------------------------------------------

enum class SpectrumKind { Homogeneous, Periodic, MixedBessel };
std::string_view to_string(SpectrumKind k);

struct SpectrumSpec {
  SpectrumKind kind = SpectrumKind::Homogeneous;
  double L = 1.0;
  double a_offset = 0.0;
  int n_max = 1;
  /// Geometry of the parabolic revolution surface (Homogeneous, Periodic).
  double a = 0.0;
  double b = 1.0;
  /// Amplitudes: z1 scales J0 (MixedBessel) and cos (Periodic); z2 scales
  /// sin (Periodic). Homogeneous profiles have unit amplitude.
  double z1 = 1.0;
  double z2 = 1.0;
};

struct SpectrumMode {
  int n = 0;
  /// Λ_n for the profile ODE (equal to λ_n for MixedBessel).
  double big_lambda = 0.0;
  /// Eigenvalue of the minimal Gauss map.
  double lambda = 0.0;
  ProfileCurve profile;
  /// Homogeneous: max(|z(a)|, |z(a+L)|); Periodic: max_k |z(a) - z(a+kL)|
  /// for k = 1, 2, 3; MixedBessel: |z(L)|.
  double boundary_residual = 0.0;
};

struct Spectrum {
  SpectrumSpec spec;
  std::vector<SpectrumMode> modes;
};

/// Throws Error(InvalidFamilyParams) for n_max < 1, L <= 0 or b <= 0.
Spectrum boundary_spectrum(const SpectrumSpec& spec);

/// Minimal-map eigen residual of the surface built from one spectral mode at
/// (λ_n, λ_n).
EigenResidualReport verify_spectrum_mode(const Spectrum& s, const SpectrumMode& mode,
                                         const EigenOptions& opt = {});

}  // namespace isogeo
