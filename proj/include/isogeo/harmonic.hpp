#pragma once

// Graph surfaces x(u, v) = (u, v, f(u, v)) in normal form, closed-form
// Laplacians of both normals, and the harmonic-Gauss-map classification.

#include <array>
#include <functional>
#include <string_view>

#include "isogeo/core.hpp"
#include "isogeo/surface.hpp"

namespace isogeo {

/// f with partials; d2 = {uu, uv, vv}, d3 = {uuu, uuv, uvv, vvv}.
struct GraphJet {
  double f = 0.0;
  std::array<double, 2> d1{};
  std::array<double, 3> d2{};
  std::array<double, 4> d3{};
};

class GraphSurface {
 public:
  using JetFn = std::function<GraphJet(ParamPoint)>;
  using ValueFn = std::function<double(ParamPoint)>;

  /// Exact partials supplied by the caller.
  GraphSurface(JetFn jet, Domain domain);
  /// Partials by 4th-order central differences; evaluation closer than the
  /// stencil reach to the boundary throws Error(StencilOutOfDomain).
  GraphSurface(ValueFn f, Domain domain);

  const Domain& domain() const { return domain_; }
  bool is_exact() const { return exact_; }
  GraphJet jet(ParamPoint p) const;

  /// The graph as a parametric surface whose derivatives come from jet().
  ParametricSurface parametric() const;

 private:
  JetFn jet_;
  Domain domain_;
  bool exact_;
};

/// Polynomial sum c[i][j] u^i v^j with i + j <= 4.
struct Polynomial2 {
  std::array<std::array<double, 5>, 5> c{};

  double operator()(double u, double v) const;
  GraphJet jet(ParamPoint p) const;
};

GraphSurface polynomial_graph(const Polynomial2& poly, Domain domain);

struct NormalLaplacians {
  IsoVector lap_minimal_normal;  // (-2 H_1, -2 H_2, 0)
  IsoVector lap_gauss_map;       // -2 grad H - tr(S^2) (0,0,1)
  double H = 0.0;
  std::array<double, 2> grad_H{};
  double trS2 = 0.0;
};

/// Closed forms, cross-checked against the generic Laplace-Beltrami engine;
/// a disagreement above 1e-8 (1 + |value|) throws
/// Error(InternalInconsistency).
NormalLaplacians normal_laplacians(const GraphSurface& s, ParamPoint p);

enum class HarmonicClass { MinimalNormalHarmonic_CMC, ParabolicNormalHarmonic_Plane, Neither };
std::string_view to_string(HarmonicClass c);

struct HarmonicClassification {
  HarmonicClass result = HarmonicClass::Neither;
  double sup_lap_minimal_normal = 0.0;
  double H_spread = 0.0;
  double sup_abs_H = 0.0;
  double sup_lap_gauss_map = 0.0;
  double sup_hessian = 0.0;
};

/// ΔN_m ≡ 0 (sup < tol) must agree with H constant (spread < tol (1 + sup|H|))
/// and ΔG ≡ 0 with a vanishing Hessian; otherwise Error(InternalInconsistency).
HarmonicClassification classify_harmonic(const GraphSurface& s, const Grid& grid, double tol);

}  // namespace isogeo
