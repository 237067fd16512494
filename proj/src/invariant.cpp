#include "isogeo/invariant.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "isogeo/errors.hpp"

namespace isogeo {
namespace {

void require_domain(const Domain& d) {
  if (!(d.u_min < d.u_max && d.t_min < d.t_max)) {
    throw Error(ErrorCode::InvalidFamilyParams, "domain must be a non-empty rectangle");
  }
}

void require_inside(const Domain& d, ParamPoint p) {
  if (!d.contains(p)) {
    throw Error(ErrorCode::DomainError, "parameter point (u=" + std::to_string(p.u) +
                                            ", t=" + std::to_string(p.t) + ") outside domain");
  }
}

void guard_axis(double u) {
  if (u < kNearAxisGuard) {
    throw Error(ErrorCode::NearSingular,
                "helicoidal evaluation at u=" + std::to_string(u) + " is too close to the axis");
  }
}

FundamentalForms make_forms(double g11, double g12, double g22, double h11, double h12,
                            double h22) {
  FundamentalForms f{g11, g12, g22, h11, h12, h22, g11 * g22 - g12 * g12, {}};
  f.g_inv = {{{g22 / f.det_g, -g12 / f.det_g}, {-g12 / f.det_g, g11 / f.det_g}}};
  return f;
}

}  // namespace

std::string_view to_string(ParabolicSubfamily s) {
  switch (s) {
    case ParabolicSubfamily::Translation: return "translation";
    case ParabolicSubfamily::WarpedTranslation: return "warped translation";
    case ParabolicSubfamily::General: return "general";
  }
  return "unknown";
}

std::string_view to_string(QuadricType q) {
  switch (q) {
    case QuadricType::EllipticParaboloid: return "elliptic paraboloid";
    case QuadricType::ParabolicCylinder: return "parabolic cylinder";
    case QuadricType::HyperbolicParaboloid: return "hyperbolic paraboloid";
    case QuadricType::Plane: return "plane";
  }
  return "unknown";
}

// --- helicoidal --------------------------------------------------------------

HelicoidalSurface::HelicoidalSurface(double c, ProfileCurve profile, Domain domain)
    : c_(c), profile_(std::move(profile)), domain_(domain) {
  if (!std::isfinite(c)) throw Error(ErrorCode::InvalidFamilyParams, "pitch c must be finite");
  require_domain(domain_);
  if (!(domain_.u_min > 0.0)) {
    throw Error(ErrorCode::InvalidFamilyParams, "helicoidal domain requires u_min > 0");
  }
}

IsoPoint HelicoidalSurface::position(ParamPoint p) const {
  guard_axis(p.u);
  return {p.u * std::cos(p.t), p.u * std::sin(p.t), profile_(p.u) + c_ * p.t};
}

ParametricSurface HelicoidalSurface::parametric(DerivativeMode mode) const {
  const double c = c_;
  const ProfileCurve profile = profile_;
  ParametricSurface s(
      [c, profile](ParamPoint p) {
        guard_axis(p.u);
        const ProfileValues z = profile.eval(p.u);
        const double u = p.u;
        const double ct = std::cos(p.t);
        const double st = std::sin(p.t);
        SurfaceJet j;
        j.x = {u * ct, u * st, z.z + c * p.t};
        j.d1 = {IsoVector{ct, st, z.dz}, IsoVector{-u * st, u * ct, c}};
        j.d2 = {IsoVector{0.0, 0.0, z.d2z}, IsoVector{-st, ct, 0.0}, IsoVector{-u * ct, -u * st, 0.0}};
        j.d3 = {IsoVector{0.0, 0.0, z.d3z}, IsoVector{0.0, 0.0, 0.0}, IsoVector{-ct, -st, 0.0},
                IsoVector{u * st, -u * ct, 0.0}};
        return j;
      },
      domain_);
  return s.with_mode(mode);
}

MotionParams HelicoidalSurface::subgroup_motion(double s) const {
  return {s, 0.0, 0.0, c_ * s, 0.0, 0.0};
}

InvariantClosedForms helicoidal_closed_forms(const HelicoidalSurface& s, ParamPoint p) {
  require_inside(s.domain(), p);
  guard_axis(p.u);
  const double u = p.u;
  const double c = s.c();
  const ProfileValues z = s.profile().eval(u);
  const double ct = std::cos(p.t);
  const double st = std::sin(p.t);
  InvariantClosedForms out;
  out.forms = make_forms(1.0, 0.0, u * u, z.d2z, -c / u, u * z.dz);
  out.K = z.dz * z.d2z / u - c * c / (u * u * u * u);
  out.H = (z.dz + u * z.d2z) / (2.0 * u);
  const double n1 = (c / u) * st - z.dz * ct;
  const double n2 = -(c / u) * ct - z.dz * st;
  out.minimal_normal = {n1, n2, 1.0};
  out.gauss_map = {n1, n2, 0.5 * (1.0 - c * c / (u * u) - z.dz * z.dz)};
  out.laplacian = {1.0 / u, 0.0, 1.0, 0.0, 1.0 / (u * u)};
  const double radial = (z.dz - u * z.d2z - u * u * z.d3z) / (u * u);
  out.lap_minimal_normal = {radial * ct, radial * st, 0.0};
  const double lap_g3 = -2.0 * c * c / (u * u * u * u) - z.dz * z.d2z / u -
                        (z.d2z * z.d2z + z.dz * z.d3z);
  out.lap_gauss_map = {radial * ct, radial * st, lap_g3};
  return out;
}

// --- parabolic revolution -------------------------------------------------------

ParabolicRevolutionSurface::ParabolicRevolutionSurface(ParabolicParams params,
                                                       ProfileCurve profile, Domain domain)
    : params_(params), profile_(std::move(profile)), domain_(domain) {
  const ParabolicParams& q = params_;
  if (!(std::isfinite(q.a) && std::isfinite(q.b) && std::isfinite(q.c) && std::isfinite(q.c1) &&
        std::isfinite(q.c2))) {
    throw Error(ErrorCode::InvalidFamilyParams, "parameters must be finite");
  }
  if (!(q.b > 0.0)) throw Error(ErrorCode::InvalidFamilyParams, "parabolic revolution requires b > 0");
  require_domain(domain_);
  if (profile_.requires_positive_u() && !(domain_.u_min > 0.0)) {
    throw Error(ErrorCode::InvalidFamilyParams,
                std::string(to_string(profile_.family())) + " profile requires u_min > 0");
  }
}

IsoPoint ParabolicRevolutionSurface::position(ParamPoint p) const {
  const ParabolicParams& q = params_;
  const double u = p.u;
  const double t = p.t;
  return {q.a * t + u, q.b * t,
          q.c * t + 0.5 * q.k() * t * t + q.c1 * u * t + profile_(u)};
}

ParametricSurface ParabolicRevolutionSurface::parametric(DerivativeMode mode) const {
  const ParabolicParams q = params_;
  const ProfileCurve profile = profile_;
  ParametricSurface s(
      [q, profile](ParamPoint p) {
        const ProfileValues z = profile.eval(p.u);
        const double u = p.u;
        const double t = p.t;
        const double k = q.k();
        SurfaceJet j;
        j.x = {q.a * t + u, q.b * t, q.c * t + 0.5 * k * t * t + q.c1 * u * t + z.z};
        j.d1 = {IsoVector{1.0, 0.0, q.c1 * t + z.dz}, IsoVector{q.a, q.b, q.c + k * t + q.c1 * u}};
        j.d2 = {IsoVector{0.0, 0.0, z.d2z}, IsoVector{0.0, 0.0, q.c1}, IsoVector{0.0, 0.0, k}};
        j.d3 = {IsoVector{0.0, 0.0, z.d3z}, IsoVector{}, IsoVector{}, IsoVector{}};
        return j;
      },
      domain_);
  return s.with_mode(mode);
}

MotionParams ParabolicRevolutionSurface::subgroup_motion(double s) const {
  const ParabolicParams& q = params_;
  return {0.0, q.a * s, q.b * s, q.c * s + 0.5 * q.k() * s * s, q.c1 * s, q.c2 * s};
}

ParabolicSubfamily ParabolicRevolutionSurface::subfamily() const {
  const ParabolicParams& q = params_;
  if (q.c == 0.0 && q.c1 == 0.0 && q.c2 == 0.0) return ParabolicSubfamily::Translation;
  if (q.c == 0.0 && q.k() == 0.0) return ParabolicSubfamily::WarpedTranslation;
  return ParabolicSubfamily::General;
}

std::optional<QuadricType> ParabolicRevolutionSurface::quadric_type() const {
  if (profile_.family() != ProfileFamily::Quadratic || profile_.cubic() != 0.0) return std::nullopt;
  const ParabolicParams& q = params_;
  const double z2 = profile_.spec().z2;
  const double alpha = (q.c1 - 2.0 * q.a * z2) / (2.0 * q.b);
  const double beta = (2.0 * q.a * q.a * z2 - q.a * q.c1 + q.b * q.c2) / (2.0 * q.b * q.b);
  if (z2 == 0.0 && alpha == 0.0 && beta == 0.0) return QuadricType::Plane;
  const double disc = z2 * beta - alpha * alpha;
  const double scale = std::abs(z2 * beta) + alpha * alpha;
  if (std::abs(disc) <= 1e-12 * scale) return QuadricType::ParabolicCylinder;
  return disc > 0.0 ? QuadricType::EllipticParaboloid : QuadricType::HyperbolicParaboloid;
}

InvariantClosedForms parabolic_closed_forms(const ParabolicRevolutionSurface& s, ParamPoint p) {
  require_inside(s.domain(), p);
  const ParabolicParams& q = s.params();
  const double u = p.u;
  const double t = p.t;
  const double a = q.a;
  const double b = q.b;
  const double k = q.k();
  const double b2 = b * b;
  const double b4 = b2 * b2;
  const double r2 = a * a + b2;
  const ProfileValues z = s.profile().eval(u);
  const double w = q.c + q.c1 * u;

  InvariantClosedForms out;
  out.forms = make_forms(1.0, a, r2, z.d2z, q.c1, k);
  out.K = (k * z.d2z - q.c1 * q.c1) / b2;
  out.H = (b * q.c2 - a * q.c1) / (2.0 * b2) + r2 * z.d2z / (2.0 * b2);
  const double n1 = -q.c1 * t - z.dz;
  const double n2 = (a * z.dz - q.c - b * q.c2 * t - q.c1 * u) / b;
  out.minimal_normal = {n1, n2, 1.0};
  const double g3 = 0.5 - w * w / (2.0 * b2) + a * w * z.dz / b2 - r2 * z.dz * z.dz / (2.0 * b2) +
                    (t / b) * ((a * q.c2 - b * q.c1) * z.dz - q.c2 * w) -
                    0.5 * t * t * (q.c1 * q.c1 + q.c2 * q.c2);
  out.gauss_map = {n1, n2, g3};
  out.laplacian = {0.0, 0.0, r2 / b2, -2.0 * a / b2, 1.0 / b2};
  out.lap_minimal_normal = {-(r2 / b2) * z.d3z, (r2 / b2) * (a / b) * z.d3z, 0.0};
  const double m = a * q.c1 - b * q.c2;
  const double lap_g3 = -(r2 * r2 / b4) * (z.d2z * z.d2z + z.dz * z.d3z) +
                        a * r2 * w * z.d3z / b4 +
                        2.0 * a * (2.0 * b2 * q.c1 + a * m) * z.d2z / b4 -
                        (m * m + 2.0 * b2 * q.c1 * q.c1) / b4 +
                        (t / (b2 * b)) * r2 * (a * q.c2 - b * q.c1) * z.d3z;
  out.lap_gauss_map = {out.lap_minimal_normal.x1, out.lap_minimal_normal.x2, lap_g3};
  return out;
}

}  // namespace isogeo
