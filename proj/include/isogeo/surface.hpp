#pragma once

// Generic geometry of admissible parametric surfaces x(u, t) in simply
// isotropic space: fundamental forms, minimal normal, parabolic Gauss map,
// shape operator, Christoffel symbols and the Laplace-Beltrami operator.

#include <array>
#include <functional>
#include <vector>

#include "isogeo/core.hpp"
#include "isogeo/jet.hpp"

namespace isogeo {

struct ParamPoint {
  double u = 0.0;
  double t = 0.0;
};

/// Closed rectangle [u_min, u_max] x [t_min, t_max].
struct Domain {
  double u_min = 0.0;
  double u_max = 1.0;
  double t_min = 0.0;
  double t_max = 1.0;

  bool contains(ParamPoint p) const {
    return p.u >= u_min && p.u <= u_max && p.t >= t_min && p.t <= t_max;
  }
  /// Shrinks every side by `margin`.
  Domain inset(double margin) const {
    return {u_min + margin, u_max - margin, t_min + margin, t_max - margin};
  }
};

/// Tensor grid of nu x nt points spanning a domain, corners included.
/// Points are ordered row-major with u as the slow index.
struct Grid {
  Domain box;
  int nu = 41;
  int nt = 17;

  ParamPoint at(int i, int j) const;
  std::vector<ParamPoint> points() const;
};

enum class DerivativeMode { ClosedForm, FiniteDifference };

/// Position and partial derivatives at a parameter point.
/// d2 = {uu, ut, tt}, d3 = {uuu, uut, utt, ttt}.
struct SurfaceJet {
  IsoPoint x;
  std::array<IsoVector, 2> d1{};
  std::array<IsoVector, 3> d2{};
  std::array<IsoVector, 4> d3{};
};

class ParametricSurface {
 public:
  using PositionFn = std::function<IsoPoint(ParamPoint)>;
  using JetFn = std::function<SurfaceJet(ParamPoint)>;

  /// Surface with exact derivatives; the mode starts as ClosedForm.
  ParametricSurface(JetFn jet, Domain domain);
  /// Surface known only through its position; always FiniteDifference.
  ParametricSurface(PositionFn position, Domain domain);

  /// Same surface evaluated in another derivative mode. ClosedForm needs an
  /// exact jet; requesting it otherwise throws Error(DomainError).
  ParametricSurface with_mode(DerivativeMode mode) const;

  /// Image under a motion; derivatives transform by the linear part.
  ParametricSurface transformed(const MotionParams& m) const;

  DerivativeMode mode() const { return mode_; }
  const Domain& domain() const { return domain_; }

  /// Distance the finite-difference stencil reaches from the evaluation point
  /// (0 in ClosedForm mode).
  double stencil_reach() const;

  /// Throws Error(DomainError) outside the domain.
  IsoPoint position(ParamPoint p) const;

  /// Throws Error(DomainError) outside the domain and
  /// Error(StencilOutOfDomain) when a finite-difference stencil would leave it.
  SurfaceJet jet(ParamPoint p) const;

 private:
  ParametricSurface() = default;

  JetFn exact_;
  PositionFn position_;
  Domain domain_;
  DerivativeMode mode_ = DerivativeMode::ClosedForm;
};

/// Step used by all finite-difference stencils (4th-order central).
inline constexpr double kFiniteDifferenceStep = 2e-3;
inline constexpr double kAdmissibilityTolerance = 1e-9;

struct FundamentalForms {
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;
  double h11 = 0.0, h12 = 0.0, h22 = 0.0;
  double det_g = 0.0;
  std::array<std::array<double, 2>, 2> g_inv{};
};

struct ShapeData {
  std::array<std::array<double, 2>, 2> S{};
  double K = 0.0;
  double H = 0.0;
};

/// gamma[k][i][j] = Γ^k_ij.
using Christoffel = std::array<std::array<std::array<double, 2>, 2>, 2>;

/// Laplacians of the minimal normal and of the parabolic Gauss map.
struct GaussLaplacians {
  IsoVector minimal_normal;
  IsoVector gauss_map;
  IsoVector lap_minimal_normal;
  IsoVector lap_gauss_map;
};

/// Scalar field on the parameter domain. When `jet` is empty the engine
/// differentiates `value` numerically.
struct ScalarField {
  std::function<double(ParamPoint)> value;
  std::function<Jet2(ParamPoint)> jet;
};

/// X_ij = x_1^i x_2^j - x_2^i x_1^j for i, j in {1, 2, 3}.
double admissibility_minor(const ParametricSurface& s, int i, int j, ParamPoint p);
bool is_admissible_at(const ParametricSurface& s, ParamPoint p);

FundamentalForms fundamental_forms(const ParametricSurface& s, ParamPoint p);
IsoVector minimal_normal(const ParametricSurface& s, ParamPoint p);
IsoVector parabolic_gauss_map(const ParametricSurface& s, ParamPoint p);
ShapeData shape_and_curvatures(const ParametricSurface& s, ParamPoint p);
Christoffel christoffel(const ParametricSurface& s, ParamPoint p);

/// Coefficients m[i][j] of dN_m/du^i in the basis a_j = x_j x (0,0,1),
/// obtained by decomposing the derivative of the minimal normal.
std::array<std::array<double, 2>, 2> weingarten_matrix(const ParametricSurface& s, ParamPoint p);

double laplace_beltrami(const ParametricSurface& s, const ScalarField& f, ParamPoint p);
GaussLaplacians gauss_map_laplacians(const ParametricSurface& s, ParamPoint p);

/// Componentwise Laplacian of the position vector.
IsoVector position_laplacian(const ParametricSurface& s, ParamPoint p);

/// Divergence-form Laplace-Beltrami operator for a given surface jet, applied
/// to a field jet.
double laplacian_from_jets(const SurfaceJet& x, const Jet2& f);

/// Numeric Jet2 of a scalar function by 4th-order central differences.
Jet2 numeric_jet(const std::function<double(ParamPoint)>& f, ParamPoint p);

}  // namespace isogeo
