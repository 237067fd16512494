#include "isogeo/surface.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "isogeo/errors.hpp"

namespace isogeo {
namespace {

constexpr double kD1[5] = {1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0};
constexpr double kD2[5] = {-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0};
constexpr double kD3[7] = {1.0 / 8.0, -1.0, 13.0 / 8.0, 0.0, -13.0 / 8.0, 1.0, -1.0 / 8.0};
constexpr double kIdentity[1] = {1.0};

struct Stencil {
  const double* w;
  int reach;
};
constexpr Stencil kS0{kIdentity, 0};
constexpr Stencil kS1{kD1, 2};
constexpr Stencil kS2{kD2, 2};
constexpr Stencil kS3{kD3, 3};

std::string describe(ParamPoint p) {
  std::ostringstream os;
  os.precision(17);
  os << "(u=" << p.u << ", t=" << p.t << ")";
  return os.str();
}

IsoVector as_vector(const IsoPoint& p) { return {p.x, p.y, p.z}; }

// Samples on offsets (a, b) in [-3, 3]^2 that any stencil product touches.
template <class Sample, class Value>
class OffsetTable {
 public:
  explicit OffsetTable(Sample sample) : sample_(std::move(sample)) {
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) {
        const bool used = (std::abs(a) <= 2 && std::abs(b) <= 2) || a == 0 || b == 0;
        if (used) values_[index(a, b)] = sample_(a, b);
      }
    }
  }

  Value apply(Stencil su, Stencil st) const {
    Value acc{};
    for (int a = -su.reach; a <= su.reach; ++a) {
      const double wa = su.w[a + su.reach];
      if (wa == 0.0) continue;
      for (int b = -st.reach; b <= st.reach; ++b) {
        const double wb = st.w[b + st.reach];
        if (wb == 0.0) continue;
        acc += (wa * wb) * values_[index(a, b)];
      }
    }
    return acc;
  }

 private:
  static int index(int a, int b) { return (a + 3) * 7 + (b + 3); }
  Sample sample_;
  std::array<Value, 49> values_{};
};

SurfaceJet finite_difference_jet(const ParametricSurface::PositionFn& f, ParamPoint p) {
  const double h = kFiniteDifferenceStep;
  auto sample = [&](int a, int b) { return as_vector(f({p.u + a * h, p.t + b * h})); };
  const OffsetTable<decltype(sample), IsoVector> table(sample);
  SurfaceJet j;
  j.x = f(p);
  const double h2 = h * h;
  const double h3 = h2 * h;
  j.d1[0] = table.apply(kS1, kS0) * (1.0 / h);
  j.d1[1] = table.apply(kS0, kS1) * (1.0 / h);
  j.d2[0] = table.apply(kS2, kS0) * (1.0 / h2);
  j.d2[1] = table.apply(kS1, kS1) * (1.0 / h2);
  j.d2[2] = table.apply(kS0, kS2) * (1.0 / h2);
  j.d3[0] = table.apply(kS3, kS0) * (1.0 / h3);
  j.d3[1] = table.apply(kS2, kS1) * (1.0 / h3);
  j.d3[2] = table.apply(kS1, kS2) * (1.0 / h3);
  j.d3[3] = table.apply(kS0, kS3) * (1.0 / h3);
  return j;
}

struct TangentJets {
  std::array<Jet2, 3> xu;
  std::array<Jet2, 3> xt;
};

TangentJets tangent_jets(const SurfaceJet& s) {
  TangentJets out;
  for (int k = 0; k < 3; ++k) {
    out.xu[k] = {s.d1[0][k], {s.d2[0][k], s.d2[1][k]}, {s.d3[0][k], s.d3[1][k], s.d3[2][k]}};
    out.xt[k] = {s.d1[1][k], {s.d2[1][k], s.d2[2][k]}, {s.d3[1][k], s.d3[2][k], s.d3[3][k]}};
  }
  return out;
}

double minor_of(const SurfaceJet& s, int i, int j) {
  return s.d1[0][i] * s.d1[1][j] - s.d1[1][i] * s.d1[0][j];
}

Jet2 minor_jet(const TangentJets& tj, int i, int j) {
  return tj.xu[i] * tj.xt[j] - tj.xt[i] * tj.xu[j];
}

void require_admissible(const SurfaceJet& s, ParamPoint p) {
  const double x12 = minor_of(s, 0, 1);
  if (!(std::abs(x12) > kAdmissibilityTolerance)) {
    throw Error(ErrorCode::NonAdmissible, "|X_12| = " + std::to_string(std::abs(x12)) +
                                              " below tolerance at " + describe(p));
  }
}

IsoVector minimal_normal_of(const SurfaceJet& s) {
  const double x12 = minor_of(s, 0, 1);
  return {minor_of(s, 1, 2) / x12, minor_of(s, 2, 0) / x12, 1.0};
}

IsoVector gauss_map_from_normal(const IsoVector& n) {
  return {n.x1, n.x2, 0.5 - 0.5 * (n.x1 * n.x1 + n.x2 * n.x2)};
}

FundamentalForms forms_of(const SurfaceJet& s) {
  const IsoVector n = minimal_normal_of(s);
  FundamentalForms f;
  f.g11 = iso_inner(s.d1[0], s.d1[0]);
  f.g12 = iso_inner(s.d1[0], s.d1[1]);
  f.g22 = iso_inner(s.d1[1], s.d1[1]);
  f.h11 = euclid_dot(s.d2[0], n);
  f.h12 = euclid_dot(s.d2[1], n);
  f.h22 = euclid_dot(s.d2[2], n);
  f.det_g = f.g11 * f.g22 - f.g12 * f.g12;
  f.g_inv = {{{f.g22 / f.det_g, -f.g12 / f.det_g}, {-f.g12 / f.det_g, f.g11 / f.det_g}}};
  return f;
}

double laplacian_with_metric(const TangentJets& tj, const Jet2& f) {
  const Jet2 g11 = tj.xu[0] * tj.xu[0] + tj.xu[1] * tj.xu[1];
  const Jet2 g12 = tj.xu[0] * tj.xt[0] + tj.xu[1] * tj.xt[1];
  const Jet2 g22 = tj.xt[0] * tj.xt[0] + tj.xt[1] * tj.xt[1];
  const Jet2 root = sqrt(g11 * g22 - g12 * g12);
  const Jet2 inv = reciprocal(root);
  const Jet2 a11 = g22 * inv;
  const Jet2 a12 = -(g12 * inv);
  const Jet2 a22 = g11 * inv;
  const double div = a11.grad[0] * f.grad[0] + a11.value * f.hess[0] + a12.grad[0] * f.grad[1] +
                     2.0 * a12.value * f.hess[1] + a12.grad[1] * f.grad[0] +
                     a22.grad[1] * f.grad[1] + a22.value * f.hess[2];
  return div / root.value;
}

Jet2 position_component_jet(const SurfaceJet& s, int k) {
  return {as_vector(s.x)[k],
          {s.d1[0][k], s.d1[1][k]},
          {s.d2[0][k], s.d2[1][k], s.d2[2][k]}};
}

}  // namespace

// --- Grid ----------------------------------------------------------------------

ParamPoint Grid::at(int i, int j) const {
  auto lerp = [](double lo, double hi, int k, int n) {
    if (n <= 1) return 0.5 * (lo + hi);
    if (k == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  };
  return {lerp(box.u_min, box.u_max, i, nu), lerp(box.t_min, box.t_max, j, nt)};
}

std::vector<ParamPoint> Grid::points() const {
  std::vector<ParamPoint> pts;
  pts.reserve(static_cast<std::size_t>(nu) * static_cast<std::size_t>(nt));
  for (int i = 0; i < nu; ++i) {
    for (int j = 0; j < nt; ++j) pts.push_back(at(i, j));
  }
  return pts;
}

// --- ParametricSurface -----------------------------------------------------------

ParametricSurface::ParametricSurface(JetFn jet, Domain domain)
    : exact_(std::move(jet)), domain_(domain), mode_(DerivativeMode::ClosedForm) {
  auto exact = exact_;
  position_ = [exact](ParamPoint p) { return exact(p).x; };
}

ParametricSurface::ParametricSurface(PositionFn position, Domain domain)
    : position_(std::move(position)), domain_(domain), mode_(DerivativeMode::FiniteDifference) {}

ParametricSurface ParametricSurface::with_mode(DerivativeMode mode) const {
  if (mode == DerivativeMode::ClosedForm && !exact_) {
    throw Error(ErrorCode::DomainError, "surface has no closed-form derivatives");
  }
  ParametricSurface copy = *this;
  copy.mode_ = mode;
  return copy;
}

ParametricSurface ParametricSurface::transformed(const MotionParams& m) const {
  ParametricSurface out;
  out.domain_ = domain_;
  out.mode_ = mode_;
  auto position = position_;
  out.position_ = [position, m](ParamPoint p) { return apply_motion(m, position(p)); };
  if (exact_) {
    auto exact = exact_;
    out.exact_ = [exact, m](ParamPoint p) {
      SurfaceJet j = exact(p);
      j.x = apply_motion(m, j.x);
      for (auto& v : j.d1) v = apply_linear(m, v);
      for (auto& v : j.d2) v = apply_linear(m, v);
      for (auto& v : j.d3) v = apply_linear(m, v);
      return j;
    };
  }
  return out;
}

double ParametricSurface::stencil_reach() const {
  return mode_ == DerivativeMode::FiniteDifference ? 3.0 * kFiniteDifferenceStep : 0.0;
}

IsoPoint ParametricSurface::position(ParamPoint p) const {
  if (!domain_.contains(p)) {
    throw Error(ErrorCode::DomainError, "parameter point " + describe(p) + " outside domain");
  }
  return position_(p);
}

SurfaceJet ParametricSurface::jet(ParamPoint p) const {
  if (!domain_.contains(p)) {
    throw Error(ErrorCode::DomainError, "parameter point " + describe(p) + " outside domain");
  }
  if (mode_ == DerivativeMode::ClosedForm) return exact_(p);
  if (!domain_.inset(stencil_reach()).contains(p)) {
    throw Error(ErrorCode::StencilOutOfDomain,
                "finite-difference stencil at " + describe(p) + " leaves the domain");
  }
  return finite_difference_jet(position_, p);
}

// --- generic geometry ---------------------------------------------------------------

double admissibility_minor(const ParametricSurface& s, int i, int j, ParamPoint p) {
  if (i < 1 || i > 3 || j < 1 || j > 3) {
    throw Error(ErrorCode::DomainError, "minor indices must lie in {1,2,3}");
  }
  return minor_of(s.jet(p), i - 1, j - 1);
}

bool is_admissible_at(const ParametricSurface& s, ParamPoint p) {
  return std::abs(admissibility_minor(s, 1, 2, p)) > kAdmissibilityTolerance;
}

FundamentalForms fundamental_forms(const ParametricSurface& s, ParamPoint p) {
  const SurfaceJet j = s.jet(p);
  require_admissible(j, p);
  return forms_of(j);
}

IsoVector minimal_normal(const ParametricSurface& s, ParamPoint p) {
  const SurfaceJet j = s.jet(p);
  require_admissible(j, p);
  return minimal_normal_of(j);
}

IsoVector parabolic_gauss_map(const ParametricSurface& s, ParamPoint p) {
  return gauss_map_from_normal(minimal_normal(s, p));
}

ShapeData shape_and_curvatures(const ParametricSurface& s, ParamPoint p) {
  const FundamentalForms f = fundamental_forms(s, p);
  ShapeData d;
  const auto& gi = f.g_inv;
  const double h[2][2] = {{f.h11, f.h12}, {f.h12, f.h22}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) d.S[i][j] = gi[i][0] * h[0][j] + gi[i][1] * h[1][j];
  }
  d.K = (f.h11 * f.h22 - f.h12 * f.h12) / f.det_g;
  d.H = 0.5 * (f.g11 * f.h22 - 2.0 * f.g12 * f.h12 + f.g22 * f.h11) / f.det_g;
  return d;
}

Christoffel christoffel(const ParametricSurface& s, ParamPoint p) {
  const SurfaceJet j = s.jet(p);
  require_admissible(j, p);
  // Top view of x_ij = Γ^1_ij x_1 + Γ^2_ij x_2 (the h_ij part is isotropic).
  const IsoVector& a = j.d1[0];
  const IsoVector& b = j.d1[1];
  const double det = a.x1 * b.x2 - b.x1 * a.x2;
  Christoffel gamma{};
  const int pair_index[2][2] = {{0, 1}, {1, 2}};
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      const IsoVector& r = j.d2[pair_index[i][k]];
      gamma[0][i][k] = (r.x1 * b.x2 - b.x1 * r.x2) / det;
      gamma[1][i][k] = (a.x1 * r.x2 - r.x1 * a.x2) / det;
    }
  }
  return gamma;
}

std::array<std::array<double, 2>, 2> weingarten_matrix(const ParametricSurface& s, ParamPoint p) {
  const SurfaceJet j = s.jet(p);
  require_admissible(j, p);
  const TangentJets tj = tangent_jets(j);
  const Jet2 x12 = minor_jet(tj, 0, 1);
  const Jet2 n1 = minor_jet(tj, 1, 2) / x12;
  const Jet2 n2 = minor_jet(tj, 2, 0) / x12;
  const IsoVector a1 = cross(j.d1[0], kIsotropicNormal);
  const IsoVector a2 = cross(j.d1[1], kIsotropicNormal);
  const double det = a1.x1 * a2.x2 - a2.x1 * a1.x2;
  std::array<std::array<double, 2>, 2> m{};
  for (int i = 0; i < 2; ++i) {
    const double r1 = n1.grad[i];
    const double r2 = n2.grad[i];
    m[i][0] = (r1 * a2.x2 - a2.x1 * r2) / det;
    m[i][1] = (a1.x1 * r2 - r1 * a1.x2) / det;
  }
  return m;
}

double laplacian_from_jets(const SurfaceJet& x, const Jet2& f) {
  return laplacian_with_metric(tangent_jets(x), f);
}

Jet2 numeric_jet(const std::function<double(ParamPoint)>& f, ParamPoint p) {
  const double h = kFiniteDifferenceStep;
  auto sample = [&](int a, int b) { return f({p.u + a * h, p.t + b * h}); };
  const OffsetTable<decltype(sample), double> table(sample);
  const double h2 = h * h;
  return {f(p),
          {table.apply(kS1, kS0) / h, table.apply(kS0, kS1) / h},
          {table.apply(kS2, kS0) / h2, table.apply(kS1, kS1) / h2, table.apply(kS0, kS2) / h2}};
}

double laplace_beltrami(const ParametricSurface& s, const ScalarField& f, ParamPoint p) {
  const SurfaceJet j = s.jet(p);
  require_admissible(j, p);
  Jet2 fj;
  if (f.jet) {
    fj = f.jet(p);
  } else {
    if (!s.domain().inset(2.0 * kFiniteDifferenceStep).contains(p)) {
      throw Error(ErrorCode::StencilOutOfDomain,
                  "field stencil at " + describe(p) + " leaves the domain");
    }
    fj = numeric_jet(f.value, p);
  }
  return laplacian_from_jets(j, fj);
}

GaussLaplacians gauss_map_laplacians(const ParametricSurface& s, ParamPoint p) {
  const SurfaceJet j = s.jet(p);
  require_admissible(j, p);
  const TangentJets tj = tangent_jets(j);
  const Jet2 x12 = minor_jet(tj, 0, 1);
  const Jet2 n1 = minor_jet(tj, 1, 2) / x12;
  const Jet2 n2 = minor_jet(tj, 2, 0) / x12;
  const Jet2 g3 = Jet2::constant(0.5) - 0.5 * (n1 * n1 + n2 * n2);
  GaussLaplacians out;
  out.minimal_normal = {n1.value, n2.value, 1.0};
  out.gauss_map = {n1.value, n2.value, g3.value};
  const double l1 = laplacian_with_metric(tj, n1);
  const double l2 = laplacian_with_metric(tj, n2);
  out.lap_minimal_normal = {l1, l2, 0.0};
  out.lap_gauss_map = {l1, l2, laplacian_with_metric(tj, g3)};
  return out;
}

IsoVector position_laplacian(const ParametricSurface& s, ParamPoint p) {
  const SurfaceJet j = s.jet(p);
  require_admissible(j, p);
  const TangentJets tj = tangent_jets(j);
  return {laplacian_with_metric(tj, position_component_jet(j, 0)),
          laplacian_with_metric(tj, position_component_jet(j, 1)),
          laplacian_with_metric(tj, position_component_jet(j, 2))};
}

}  // namespace isogeo
