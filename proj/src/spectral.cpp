#include "isogeo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "isogeo/bessel.hpp"
#include "isogeo/errors.hpp"

namespace isogeo {
namespace {

constexpr double kPi = std::numbers::pi;

double component(const IsoVector& v, int i) { return v[i]; }

GaussSample select(GaussMapKind kind, const IsoVector& n, const IsoVector& lap_n,
                   const IsoVector& g, const IsoVector& lap_g) {
  return kind == GaussMapKind::Minimal ? GaussSample{n, lap_n} : GaussSample{g, lap_g};
}

void inconsistent(const std::string& what) { throw Error(ErrorCode::InconsistentCase, what); }
void invalid(const std::string& what) { throw Error(ErrorCode::InvalidFamilyParams, what); }

double default_tolerance(Route r) {
  return r == Route::GenericFiniteDifference ? kFiniteDifferenceResidualTolerance
                                             : kExactResidualTolerance;
}

Outcome combine(const std::array<CoordinateReport, 3>& coords) {
  bool inconclusive = false;
  bool failed = false;
  for (const auto& c : coords) {
    if (c.declared_lambda) {
      if (!c.passed) {
        if (c.verdict == Verdict::Inconclusive) inconclusive = true;
        else failed = true;
      }
    } else if (c.verdict == Verdict::NotEigenfunction) {
      failed = true;
    } else if (c.verdict == Verdict::Inconclusive) {
      inconclusive = true;
    }
  }
  if (failed) return Outcome::Fail;
  if (inconclusive) return Outcome::Inconclusive;
  return Outcome::Pass;
}

template <class Surface>
EigenResidualReport residual_for_invariant(const Surface& s, GaussMapKind kind,
                                           const DeclaredLambdas& lambdas,
                                           const EigenOptions& opt) {
  Domain box = opt.box.value_or(s.domain());
  GaussSampler sampler;
  switch (opt.route) {
    case Route::ClosedForm:
      sampler = closed_form_sampler(s, kind);
      break;
    case Route::GenericExact:
      sampler = generic_sampler(s.parametric(DerivativeMode::ClosedForm), kind);
      break;
    case Route::GenericFiniteDifference: {
      ParametricSurface fd = s.parametric(DerivativeMode::FiniteDifference);
      if (!opt.box) box = box.inset(fd.stencil_reach());
      sampler = generic_sampler(fd, kind);
      break;
    }
  }
  const double tol = opt.tolerance.value_or(default_tolerance(opt.route));
  return eigen_residual(sampler, kind, opt.route, Grid{box, opt.nu, opt.nt}, lambdas, tol);
}

ProfileCurve trig_or_hyper(double z0, double z1, double z2, double big_lambda) {
  return big_lambda > 0.0 ? trig_profile(z0, z1, z2, big_lambda)
                          : hyper_profile(z0, z1, z2, big_lambda);
}

}  // namespace

std::string_view to_string(GaussMapKind k) {
  return k == GaussMapKind::Minimal ? "minimal" : "parabolic";
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::ClosedForm: return "closed_form";
    case Route::GenericExact: return "generic_exact";
    case Route::GenericFiniteDifference: return "generic_finite_difference";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Eigenfunction: return "eigenfunction";
    case Verdict::NotEigenfunction: return "not_eigenfunction";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Trivial: return "trivial";
  }
  return "unknown";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

// --- samplers -----------------------------------------------------------------

GaussSampler closed_form_sampler(const HelicoidalSurface& s, GaussMapKind kind) {
  return [s, kind](ParamPoint p) {
    const InvariantClosedForms cf = helicoidal_closed_forms(s, p);
    return select(kind, cf.minimal_normal, cf.lap_minimal_normal, cf.gauss_map, cf.lap_gauss_map);
  };
}

GaussSampler closed_form_sampler(const ParabolicRevolutionSurface& s, GaussMapKind kind) {
  return [s, kind](ParamPoint p) {
    const InvariantClosedForms cf = parabolic_closed_forms(s, p);
    return select(kind, cf.minimal_normal, cf.lap_minimal_normal, cf.gauss_map, cf.lap_gauss_map);
  };
}

GaussSampler generic_sampler(const ParametricSurface& s, GaussMapKind kind) {
  return [s, kind](ParamPoint p) {
    const GaussLaplacians gl = gauss_map_laplacians(s, p);
    return select(kind, gl.minimal_normal, gl.lap_minimal_normal, gl.gauss_map, gl.lap_gauss_map);
  };
}

GaussSamples sample_gauss_map(const GaussSampler& sampler, const Grid& grid) {
  GaussSamples data{grid, {}};
  const auto pts = grid.points();
  data.samples.reserve(pts.size());
  for (const ParamPoint& p : pts) data.samples.push_back(sampler(p));
  return data;
}

// --- analysis -------------------------------------------------------------------

double coordinate_residual(const GaussSamples& data, int coord, double lambda) {
  double sup = 0.0;
  for (const GaussSample& s : data.samples) {
    sup = std::max(sup, std::abs(component(s.laplacian, coord) + lambda * component(s.value, coord)));
  }
  return sup;
}

CoordinateReport analyse_coordinate(const GaussSamples& data, int coord,
                                    std::optional<double> declared, double tolerance) {
  CoordinateReport r;
  r.declared_lambda = declared;
  for (const GaussSample& s : data.samples) {
    r.sup_value = std::max(r.sup_value, std::abs(component(s.value, coord)));
  }
  r.trivial = r.sup_value < kTrivialityThreshold;
  if (r.trivial) {
    r.verdict = Verdict::Trivial;
    r.sup_residual = declared ? coordinate_residual(data, coord, *declared) : 0.0;
    r.passed = true;
    return r;
  }

  const double floor = kFitInclusionFraction * r.sup_value;
  double sum = 0.0;
  int count = 0;
  for (const GaussSample& s : data.samples) {
    const double g = component(s.value, coord);
    if (std::abs(g) >= floor) {
      sum += -component(s.laplacian, coord) / g;
      ++count;
    }
  }
  const double fitted = sum / count;
  double deviation = 0.0;
  for (const GaussSample& s : data.samples) {
    const double g = component(s.value, coord);
    if (std::abs(g) >= floor) {
      deviation = std::max(deviation, std::abs(-component(s.laplacian, coord) / g - fitted));
    }
  }
  r.fitted_lambda = fitted;
  r.constancy_deviation = deviation;
  if (deviation <= kEigenfunctionDeviation * (1.0 + std::abs(fitted))) {
    r.verdict = Verdict::Eigenfunction;
  } else if (deviation > kNotEigenfunctionDeviation) {
    r.verdict = Verdict::NotEigenfunction;
  } else {
    r.verdict = Verdict::Inconclusive;
  }
  r.sup_residual = coordinate_residual(data, coord, declared.value_or(fitted));
  r.passed = !declared || r.sup_residual <= tolerance;
  return r;
}

EigenResidualReport eigen_residual(const GaussSampler& sampler, GaussMapKind kind, Route route,
                                   const Grid& grid, const DeclaredLambdas& lambdas,
                                   double tolerance) {
  EigenResidualReport rep;
  rep.kind = kind;
  rep.route = route;
  rep.grid = grid;
  rep.tolerance = tolerance;
  const GaussSamples data = sample_gauss_map(sampler, grid);
  for (int i = 0; i < 3; ++i) rep.coords[i] = analyse_coordinate(data, i, lambdas[i], tolerance);
  rep.outcome = combine(rep.coords);
  return rep;
}

EigenResidualReport eigen_residual(const HelicoidalSurface& s, GaussMapKind kind,
                                   const DeclaredLambdas& lambdas, const EigenOptions& opt) {
  return residual_for_invariant(s, kind, lambdas, opt);
}

EigenResidualReport eigen_residual(const ParabolicRevolutionSurface& s, GaussMapKind kind,
                                   const DeclaredLambdas& lambdas, const EigenOptions& opt) {
  return residual_for_invariant(s, kind, lambdas, opt);
}

EigenResidualReport eigen_residual(const ParametricSurface& s, GaussMapKind kind,
                                   const DeclaredLambdas& lambdas, const EigenOptions& opt) {
  const Route route = s.mode() == DerivativeMode::ClosedForm ? Route::GenericExact
                                                             : Route::GenericFiniteDifference;
  const Domain box = opt.box.value_or(s.domain().inset(s.stencil_reach()));
  const double tol = opt.tolerance.value_or(default_tolerance(route));
  return eigen_residual(generic_sampler(s, kind), kind, route, Grid{box, opt.nu, opt.nt}, lambdas,
                        tol);
}

// --- helicoidal families -----------------------------------------------------------

HelicoidalFamily helicoidal_minimal_family(const HelicoidalMinimalSpec& spec) {
  const double l1 = spec.lambda1;
  const double l2 = spec.lambda2;
  if (spec.c != 0.0) {
    if (l1 != 0.0 || l2 != 0.0) {
      inconsistent("pitch c != 0 requires lambda1 = lambda2 = 0 (lambda_i c = 0)");
    }
    return {HelicoidalSurface(spec.c, quadratic_log_profile(spec.z0, spec.z1, spec.z2), spec.domain),
            {0.0, 0.0, std::nullopt},
            "1"};
  }
  if (l1 == 0.0 && l2 == 0.0) {
    return {HelicoidalSurface(0.0, quadratic_log_profile(spec.z0, spec.z1, spec.z2), spec.domain),
            {0.0, 0.0, std::nullopt},
            "2a"};
  }
  if (l1 == l2) {
    return {HelicoidalSurface(0.0, bessel_profile(spec.z0, spec.z1, spec.z2, l1), spec.domain),
            {l1, l1, std::nullopt},
            "2b"};
  }
  if (spec.z1 != 0.0 || spec.z2 != 0.0) {
    inconsistent("lambda1 != lambda2 forces a constant profile (z1 = z2 = 0)");
  }
  return {HelicoidalSurface(0.0, constant_profile(spec.z0), spec.domain),
          {l1, l2, std::nullopt},
          "2c"};
}

std::string_view to_string(BoundednessRegime r) {
  switch (r) {
    case BoundednessRegime::NearAxis: return "near_axis";
    case BoundednessRegime::AtInfinity: return "at_infinity";
    case BoundednessRegime::Both: return "both";
  }
  return "unknown";
}

HelicoidalFamily boundedness_family(const BoundednessSpec& spec) {
  const double l = spec.lambda;
  if (spec.c != 0.0 && l != 0.0) inconsistent("pitch c != 0 requires lambda = 0");
  switch (spec.regime) {
    case BoundednessRegime::NearAxis:
      if (spec.z2 != 0.0) {
        inconsistent("bounded near the axis excludes the ln u, Y0 and K0 members (z2 = 0)");
      }
      break;
    case BoundednessRegime::AtInfinity:
      if (l == 0.0) inconsistent("no non-planar lambda = 0 profile is bounded at infinity");
      if (l < 0.0 && spec.z1 != 0.0) {
        inconsistent("bounded at infinity with lambda < 0 excludes the I0 member (z1 = 0)");
      }
      break;
    case BoundednessRegime::Both:
      if (!(l > 0.0)) inconsistent("bounded near the axis and at infinity requires lambda > 0");
      if (spec.z2 != 0.0) inconsistent("bounded near the axis and at infinity excludes Y0 (z2 = 0)");
      break;
  }
  ProfileCurve profile = l == 0.0 ? quadratic_log_profile(spec.z0, spec.z1, spec.z2)
                                  : bessel_profile(spec.z0, spec.z1, spec.z2, l);
  return {HelicoidalSurface(spec.c, std::move(profile), spec.domain),
          {l, l, std::nullopt},
          std::string(to_string(spec.regime))};
}

BoundednessProbe probe_boundedness(const ProfileCurve& profile, double z0) {
  BoundednessProbe p;
  constexpr int kSamples = 200;
  const double ref = profile(1e-2);
  double scale = 1.0 + std::abs(profile.spec().z1) + std::abs(profile.spec().z2);
  for (int i = 0; i <= kSamples; ++i) {
    const double u = 1e-3 + (1e-2 - 1e-3) * i / kSamples;
    p.near_axis_variation = std::max(p.near_axis_variation, std::abs(profile(u) - ref));
  }
  for (int i = 0; i <= kSamples; ++i) {
    const double u = 50.0 + 50.0 * i / kSamples;
    p.at_infinity_deviation = std::max(p.at_infinity_deviation, std::abs(profile(u) - z0));
  }
  p.bounded_near_axis = p.near_axis_variation <= 1e-2 * scale;
  p.bounded_at_infinity = p.at_infinity_deviation <= scale;
  return p;
}

// --- parabolic families ---------------------------------------------------------------

std::string_view to_string(ParabolicCase c) {
  switch (c) {
    case ParabolicCase::Case1: return "1";
    case ParabolicCase::Case2a: return "2a";
    case ParabolicCase::Case2b: return "2b";
    case ParabolicCase::Case3: return "3";
    case ParabolicCase::Case4a: return "4a";
    case ParabolicCase::Case4b: return "4b";
  }
  return "unknown";
}

ParabolicFamily parabolic_minimal_family(const ParabolicMinimalSpec& spec) {
  const ParabolicParams& q = spec.params;
  const double l1 = spec.lambda1;
  const double l2 = spec.lambda2;
  const std::string label(to_string(spec.which));
  const bool top_view_params_zero = q.a == 0.0 && q.c == 0.0 && q.c1 == 0.0 && q.c2 == 0.0;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) inconsistent("case " + label + ": " + what);
  };

  std::optional<ProfileCurve> profile;
  DeclaredLambdas lambdas{l1, l2, std::nullopt};
  std::optional<CylinderChart> cylinder;
  switch (spec.which) {
    case ParabolicCase::Case1: {
      need(l1 == 0.0 && l2 == 0.0, "requires lambda1 = lambda2 = 0");
      need(q.c1 != 0.0 || spec.z1 != 0.0 || spec.z2 != 0.0, "requires c1 != 0 or z non-constant");
      need(2.0 * q.a * spec.z2 != q.c1 || q.a * spec.z1 != q.c,
           "requires 2 a z2 != c1 or a z1 != c");
      profile = quadratic_profile(spec.z0, spec.z1, spec.z2);
      break;
    }
    case ParabolicCase::Case2a:
      need(top_view_params_zero, "requires a = c = c1 = c2 = 0");
      need(l1 == 0.0 && l2 != 0.0, "requires lambda1 = 0 and lambda2 != 0");
      profile = quadratic_profile(spec.z0, spec.z1, spec.z2);
      break;
    case ParabolicCase::Case2b:
      need(q.a != 0.0 && q.c2 == 0.0, "requires a != 0 and c2 = 0");
      need(l1 == 0.0 && l2 != 0.0, "requires lambda1 = 0 and lambda2 != 0");
      need(spec.z1 == 0.0 && spec.z2 == 0.0, "profile is fixed by (a, c, c1); leave z1 = z2 = 0");
      profile = quadratic_profile(spec.z0, q.c / q.a, q.c1 / (2.0 * q.a));
      break;
    case ParabolicCase::Case3:
      need(q.c1 == 0.0, "requires c1 = 0");
      need(l1 != 0.0 && l2 == 0.0, "requires lambda1 != 0 and lambda2 = 0");
      need(spec.z1 == 0.0 && spec.z2 == 0.0, "profile is constant; leave z1 = z2 = 0");
      profile = constant_profile(spec.z0);
      break;
    case ParabolicCase::Case4a:
      need(top_view_params_zero, "requires a = c = c1 = c2 = 0");
      need(l1 != 0.0 && l2 != 0.0, "requires lambda1, lambda2 != 0");
      profile = trig_or_hyper(spec.z0, spec.z1, spec.z2, l1);
      break;
    case ParabolicCase::Case4b: {
      need(q.a != 0.0 && q.c == 0.0 && q.c1 == 0.0 && q.c2 == 0.0,
           "requires a != 0 and c = c1 = c2 = 0");
      need(l1 == l2 && l1 != 0.0, "requires lambda1 = lambda2 != 0");
      const double big = l1 * q.b * q.b / (q.a * q.a + q.b * q.b);
      profile = trig_or_hyper(spec.z0, spec.z1, spec.z2, big);
      break;
    }
  }

  ParabolicRevolutionSurface surface(q, *profile, spec.domain);
  switch (spec.which) {
    case ParabolicCase::Case2a:
    case ParabolicCase::Case4a:
    case ParabolicCase::Case4b:
      cylinder = CylinderChart{[surface](double v, double w) { return surface.position({v, w}); },
                               IsoVector{q.a, q.b, 0.0}, "(v, w) = (u, t)"};
      break;
    case ParabolicCase::Case2b:
      cylinder = CylinderChart{
          [surface, a = q.a](double v, double w) { return surface.position({v - a * w, w}); },
          IsoVector{0.0, q.b, 0.0}, "(v, w) = (u + a t, t)"};
      break;
    case ParabolicCase::Case3:
      cylinder = CylinderChart{[surface](double v, double w) { return surface.position({w, v}); },
                               IsoVector{1.0, 0.0, 0.0}, "(v, w) = (t, u)"};
      break;
    case ParabolicCase::Case1:
      break;
  }
  return {surface, lambdas, label, cylinder};
}

ParabolicFamily lambda3_family(double a, double b, double lambda, double phi0, double z0,
                               Domain domain) {
  if (lambda == 0.0) invalid("lambda3 family requires lambda != 0");
  if (!(b > 0.0)) invalid("parabolic revolution requires b > 0");
  const double big = lambda * b * b / (a * a + b * b);
  const double amp = std::sqrt(2.0 / std::abs(lambda));
  ProfileCurve profile = lambda > 0.0
                             ? trig_profile(z0, amp * std::sin(phi0), amp * std::cos(phi0), big)
                             : hyper_profile(z0, amp * std::sinh(phi0), amp * std::cosh(phi0), big);
  return {ParabolicRevolutionSurface({a, b, 0.0, 0.0, 0.0}, std::move(profile), domain),
          {lambda, lambda, 4.0 * lambda},
          "lambda3",
          std::nullopt};
}

ParabolicFamily linear_profile_family(double a, double b, double c, double z0, double z1,
                                      double lambda3, Domain domain) {
  if (lambda3 != 0.0) {
    inconsistent("with c1 = c2 = 0 and a linear profile the parabolic Gauss map is constant; "
                 "only lambda3 = 0 is realisable");
  }
  return {ParabolicRevolutionSurface({a, b, c, 0.0, 0.0}, quadratic_profile(z0, z1, 0.0), domain),
          {0.0, 0.0, 0.0},
          "linear",
          std::nullopt};
}

// --- third coordinate ODE ------------------------------------------------------------

double g3_ode_residual_at(const ProfileCurve& z, double c, double lambda3, double u) {
  const ProfileValues v = z.eval(u);
  const double g = 0.5 * (v.dz * v.dz - 1.0);
  const double dg = v.dz * v.d2z;
  const double d2g = v.d2z * v.d2z + v.dz * v.d3z;
  return -u * d2g - dg - lambda3 * u * g - lambda3 * c * c / (2.0 * u) - 2.0 * c * c / (u * u * u);
}

double g3_ode_residual(const ProfileCurve& z, double c, double lambda3,
                       const std::vector<double>& u_grid) {
  double sup = 0.0;
  for (double u : u_grid) sup = std::max(sup, std::abs(g3_ode_residual_at(z, c, lambda3, u)));
  return sup;
}

// --- spectra ---------------------------------------------------------------------------

std::string_view to_string(SpectrumKind k) {
  switch (k) {
    case SpectrumKind::Homogeneous: return "homogeneous";
    case SpectrumKind::Periodic: return "periodic";
    case SpectrumKind::MixedBessel: return "mixed_bessel";
  }
  return "unknown";
}

Spectrum boundary_spectrum(const SpectrumSpec& spec) {
  if (spec.n_max < 1) invalid("n_max must be at least 1");
  if (!(spec.L > 0.0)) invalid("L must be positive");
  if (!(spec.b > 0.0)) invalid("b must be positive");
  Spectrum out{spec, {}};
  const double L = spec.L;
  const double a0 = spec.a_offset;
  const double ratio = (spec.a * spec.a + spec.b * spec.b) / (spec.b * spec.b);
  std::vector<double> zeros;
  if (spec.kind == SpectrumKind::MixedBessel) zeros = bessel::j0_zeros(spec.n_max);

  for (int n = 1; n <= spec.n_max; ++n) {
    switch (spec.kind) {
      case SpectrumKind::Homogeneous: {
        const double k = n * kPi / L;
        const double big = k * k;
        ProfileCurve z = trig_profile(0.0, -std::sin(k * a0), std::cos(k * a0), big);
        const double res = std::max(std::abs(z(a0)), std::abs(z(a0 + L)));
        out.modes.push_back({n, big, big * ratio, std::move(z), res});
        break;
      }
      case SpectrumKind::Periodic: {
        const double k = 2.0 * n * kPi / L;
        const double big = k * k;
        ProfileCurve z = trig_profile(0.0, spec.z1, spec.z2, big);
        double res = 0.0;
        for (int m = 1; m <= 3; ++m) res = std::max(res, std::abs(z(a0) - z(a0 + m * L)));
        out.modes.push_back({n, big, big * ratio, std::move(z), res});
        break;
      }
      case SpectrumKind::MixedBessel: {
        const double un = zeros[static_cast<std::size_t>(n - 1)];
        const double lambda = (un / L) * (un / L);
        ProfileCurve z = bessel_profile(0.0, spec.z1, 0.0, lambda);
        const double res = std::abs(z(L));
        out.modes.push_back({n, lambda, lambda, std::move(z), res});
        break;
      }
    }
  }
  return out;
}

EigenResidualReport verify_spectrum_mode(const Spectrum& s, const SpectrumMode& mode,
                                         const EigenOptions& opt) {
  const SpectrumSpec& spec = s.spec;
  const DeclaredLambdas lambdas{mode.lambda, mode.lambda, std::nullopt};
  if (spec.kind == SpectrumKind::MixedBessel) {
    const HelicoidalSurface surface(0.0, mode.profile,
                                    Domain{0.05 * spec.L, spec.L, 0.0, 2.0 * kPi});
    return eigen_residual(surface, GaussMapKind::Minimal, lambdas, opt);
  }
  const ParabolicRevolutionSurface surface(
      {spec.a, spec.b, 0.0, 0.0, 0.0}, mode.profile,
      Domain{spec.a_offset, spec.a_offset + spec.L, -1.0, 1.0});
  return eigen_residual(surface, GaussMapKind::Minimal, lambdas, opt);
}

}  // namespace isogeo
