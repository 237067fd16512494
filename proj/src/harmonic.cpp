#include "isogeo/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "isogeo/errors.hpp"

namespace isogeo {
namespace {

constexpr double kCrossCheckTolerance = 1e-8;

double falling(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

void cross_check(double closed, double generic, const char* what, ParamPoint p) {
  if (std::abs(closed - generic) > kCrossCheckTolerance * (1.0 + std::abs(closed))) {
    throw Error(ErrorCode::InternalInconsistency,
                std::string(what) + " closed form " + std::to_string(closed) +
                    " disagrees with the generic Laplacian " + std::to_string(generic) +
                    " at (u=" + std::to_string(p.u) + ", v=" + std::to_string(p.t) + ")");
  }
}

}  // namespace

GraphSurface::GraphSurface(JetFn jet, Domain domain)
    : jet_(std::move(jet)), domain_(domain), exact_(true) {}

GraphSurface::GraphSurface(ValueFn f, Domain domain) : domain_(domain), exact_(false) {
  // Third partials come from differencing the numeric second partials.
  jet_ = [f = std::move(f)](ParamPoint p) {
    const double h = kFiniteDifferenceStep;
    auto second = [&](ParamPoint q) { return numeric_jet(f, q); };
    const Jet2 c = second(p);
    GraphJet g;
    g.f = c.value;
    g.d1 = c.grad;
    g.d2 = c.hess;
    const Jet2 um2 = second({p.u - 2 * h, p.t}), um1 = second({p.u - h, p.t});
    const Jet2 up1 = second({p.u + h, p.t}), up2 = second({p.u + 2 * h, p.t});
    const Jet2 vm2 = second({p.u, p.t - 2 * h}), vm1 = second({p.u, p.t - h});
    const Jet2 vp1 = second({p.u, p.t + h}), vp2 = second({p.u, p.t + 2 * h});
    auto d = [h](double m2, double m1, double p1, double p2) {
      return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    };
    g.d3[0] = d(um2.hess[0], um1.hess[0], up1.hess[0], up2.hess[0]);
    g.d3[1] = d(um2.hess[1], um1.hess[1], up1.hess[1], up2.hess[1]);
    g.d3[2] = d(um2.hess[2], um1.hess[2], up1.hess[2], up2.hess[2]);
    g.d3[3] = d(vm2.hess[2], vm1.hess[2], vp1.hess[2], vp2.hess[2]);
    return g;
  };
}

GraphJet GraphSurface::jet(ParamPoint p) const {
  if (!domain_.contains(p)) {
    throw Error(ErrorCode::DomainError, "graph evaluation outside domain");
  }
  if (!exact_ && !domain_.inset(4.0 * kFiniteDifferenceStep).contains(p)) {
    throw Error(ErrorCode::StencilOutOfDomain, "graph stencil leaves the domain");
  }
  return jet_(p);
}

ParametricSurface GraphSurface::parametric() const {
  GraphSurface self = *this;
  return ParametricSurface(
      [self](ParamPoint p) {
        const GraphJet g = self.jet(p);
        SurfaceJet j;
        j.x = {p.u, p.t, g.f};
        j.d1 = {IsoVector{1.0, 0.0, g.d1[0]}, IsoVector{0.0, 1.0, g.d1[1]}};
        j.d2 = {IsoVector{0.0, 0.0, g.d2[0]}, IsoVector{0.0, 0.0, g.d2[1]},
                IsoVector{0.0, 0.0, g.d2[2]}};
        j.d3 = {IsoVector{0.0, 0.0, g.d3[0]}, IsoVector{0.0, 0.0, g.d3[1]},
                IsoVector{0.0, 0.0, g.d3[2]}, IsoVector{0.0, 0.0, g.d3[3]}};
        return j;
      },
      domain_);
}

double Polynomial2::operator()(double u, double v) const {
  double s = 0.0;
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; i + j <= 4; ++j) s += c[i][j] * ipow(u, i) * ipow(v, j);
  }
  return s;
}

GraphJet Polynomial2::jet(ParamPoint p) const {
  auto partial = [&](int pu, int pv) {
    double s = 0.0;
    for (int i = pu; i <= 4; ++i) {
      for (int j = pv; i + j <= 4; ++j) {
        if (c[i][j] == 0.0) continue;
        s += c[i][j] * falling(i, pu) * falling(j, pv) * ipow(p.u, i - pu) * ipow(p.t, j - pv);
      }
    }
    return s;
  };
  GraphJet g;
  g.f = partial(0, 0);
  g.d1 = {partial(1, 0), partial(0, 1)};
  g.d2 = {partial(2, 0), partial(1, 1), partial(0, 2)};
  g.d3 = {partial(3, 0), partial(2, 1), partial(1, 2), partial(0, 3)};
  return g;
}

GraphSurface polynomial_graph(const Polynomial2& poly, Domain domain) {
  return GraphSurface([poly](ParamPoint p) { return poly.jet(p); }, domain);
}

NormalLaplacians normal_laplacians(const GraphSurface& s, ParamPoint p) {
  const GraphJet g = s.jet(p);
  NormalLaplacians out;
  out.H = 0.5 * (g.d2[0] + g.d2[2]);
  out.grad_H = {0.5 * (g.d3[0] + g.d3[2]), 0.5 * (g.d3[1] + g.d3[3])};
  out.trS2 = g.d2[0] * g.d2[0] + 2.0 * g.d2[1] * g.d2[1] + g.d2[2] * g.d2[2];
  const double h1 = out.grad_H[0];
  const double h2 = out.grad_H[1];
  out.lap_minimal_normal = {-2.0 * h1, -2.0 * h2, 0.0};
  out.lap_gauss_map = {-2.0 * h1, -2.0 * h2, -2.0 * (h1 * g.d1[0] + h2 * g.d1[1]) - out.trS2};

  const GaussLaplacians generic = gauss_map_laplacians(s.parametric(), p);
  cross_check(out.lap_minimal_normal.x1, generic.lap_minimal_normal.x1, "ΔN_m^1", p);
  cross_check(out.lap_minimal_normal.x2, generic.lap_minimal_normal.x2, "ΔN_m^2", p);
  cross_check(out.lap_gauss_map.x3, generic.lap_gauss_map.x3, "ΔG^3", p);
  return out;
}

std::string_view to_string(HarmonicClass c) {
  switch (c) {
    case HarmonicClass::MinimalNormalHarmonic_CMC: return "minimal_normal_harmonic_cmc";
    case HarmonicClass::ParabolicNormalHarmonic_Plane: return "parabolic_normal_harmonic_plane";
    case HarmonicClass::Neither: return "neither";
  }
  return "unknown";
}

HarmonicClassification classify_harmonic(const GraphSurface& s, const Grid& grid, double tol) {
  HarmonicClassification r;
  double h_min = std::numeric_limits<double>::infinity();
  double h_max = -std::numeric_limits<double>::infinity();
  for (const ParamPoint& p : grid.points()) {
    const NormalLaplacians nl = normal_laplacians(s, p);
    const GraphJet g = s.jet(p);
    r.sup_lap_minimal_normal = std::max(
        {r.sup_lap_minimal_normal, std::abs(nl.lap_minimal_normal.x1), std::abs(nl.lap_minimal_normal.x2)});
    r.sup_lap_gauss_map = std::max({r.sup_lap_gauss_map, std::abs(nl.lap_gauss_map.x1),
                                    std::abs(nl.lap_gauss_map.x2), std::abs(nl.lap_gauss_map.x3)});
    r.sup_hessian = std::max({r.sup_hessian, std::abs(g.d2[0]), std::abs(g.d2[1]), std::abs(g.d2[2])});
    r.sup_abs_H = std::max(r.sup_abs_H, std::abs(nl.H));
    h_min = std::min(h_min, nl.H);
    h_max = std::max(h_max, nl.H);
  }
  r.H_spread = h_max - h_min;

  const bool minimal_harmonic = r.sup_lap_minimal_normal < tol;
  const bool cmc = r.H_spread < tol * (1.0 + r.sup_abs_H);
  if (minimal_harmonic != cmc) {
    throw Error(ErrorCode::InternalInconsistency,
                "ΔN_m sup " + std::to_string(r.sup_lap_minimal_normal) + " vs H spread " +
                    std::to_string(r.H_spread) + " disagree at tol " + std::to_string(tol));
  }
  const bool parabolic_harmonic = r.sup_lap_gauss_map < tol;
  const bool plane = r.sup_hessian < tol;
  if (parabolic_harmonic != plane) {
    throw Error(ErrorCode::InternalInconsistency,
                "ΔG sup " + std::to_string(r.sup_lap_gauss_map) + " vs Hessian sup " +
                    std::to_string(r.sup_hessian) + " disagree at tol " + std::to_string(tol));
  }
  if (plane) r.result = HarmonicClass::ParabolicNormalHarmonic_Plane;
  else if (minimal_harmonic) r.result = HarmonicClass::MinimalNormalHarmonic_CMC;
  else r.result = HarmonicClass::Neither;
  return r;
}

}  // namespace isogeo
