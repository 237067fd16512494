#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "isogeo/bessel.hpp"
#include "isogeo/errors.hpp"
#include "isogeo/spectral.hpp"
#include "oracles.hpp"

using namespace isogeo;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

double worst_declared(const EigenResidualReport& r) {
  double w = 0.0;
  for (const auto& c : r.coords) {
    if (c.declared_lambda) w = std::max(w, c.sup_residual);
  }
  return w;
}

double h_spread(const HelicoidalSurface& s) {
  double lo = 1e300;
  double hi = -1e300;
  for (ParamPoint p : Grid{s.domain(), 41, 17}.points()) {
    const double h = helicoidal_closed_forms(s, p).H;
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  return hi - lo;
}

double h_spread(const ParabolicRevolutionSurface& s) {
  double lo = 1e300;
  double hi = -1e300;
  for (ParamPoint p : Grid{s.domain(), 41, 17}.points()) {
    const double h = parabolic_closed_forms(s, p).H;
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  return hi - lo;
}

std::vector<HelicoidalFamily> helicoidal_cases() {
  return {helicoidal_minimal_family({1.0, 0, 0, 0.0, 1.0, 0.25}),
          helicoidal_minimal_family({0.0, 0, 0, 0.5, -0.7, 0.3}),
          helicoidal_minimal_family({0.0, 1, 1, 0.0, 1.0, 0.4}),
          helicoidal_minimal_family({0.0, -1, -1, 0.2, 0.6, 0.5}),
          helicoidal_minimal_family({0.0, 1, 2, 0.3, 0.0, 0.0})};
}

std::vector<ParabolicFamily> parabolic_cases() {
  using C = ParabolicCase;
  return {parabolic_minimal_family({C::Case1, {1, 1, 0, 1, 0}, 0, 0, 1, 0, 0}),
          parabolic_minimal_family({C::Case2a, {0, 1.5, 0, 0, 0}, 0.2, 0.4, -0.6, 0, 3}),
          parabolic_minimal_family({C::Case2b, {0.8, 1.2, 0.5, 0.6, 0}, 0.1, 0, 0, 0, -2}),
          parabolic_minimal_family({C::Case3, {0.4, 1.1, 0.3, 0, 0.7}, 0.5, 0, 0, 1.5, 0}),
          parabolic_minimal_family({C::Case4a, {0, 0.9, 0, 0, 0}, 0.1, 0.5, 0.3, 2, -1}),
          parabolic_minimal_family({C::Case4b, {1, 1, 0, 0, 0}, 0, 0, 1, 2, 2})};
}

// Sampler whose coordinates are exact eigenfunctions except for a controllable defect.
GaussSampler synthetic(double defect1, double defect2) {
  return [=](ParamPoint p) {
    const double f = 2.0 + std::sin(p.u);
    const double g = 3.0 + p.t;
    GaussSample s;
    s.value = {f, g, 1.0};
    s.laplacian = {-2.0 * f + defect1 * p.u * f, -5.0 * g + defect2 * p.u * g, 0.0};
    return s;
  };
}

}  // namespace

TEST_CASE("eigen residual examples") {
  const HelicoidalSurface fig1(1.0, quadratic_log_profile(0.0, 1.0, 0.25));
  const auto r1 = eigen_residual(fig1, GaussMapKind::Minimal, {0.0, 0.0, std::nullopt});
  CHECK(r1.coords[0].sup_residual <= 1e-9);
  CHECK(r1.coords[1].sup_residual <= 1e-9);
  CHECK(r1.outcome == Outcome::Pass);
  CHECK(r1.grid.nu == 41);
  CHECK(r1.grid.nt == 17);

  const HelicoidalSurface j0(0.0, bessel_profile(0.0, 1.0, 0.0, 1.0));
  const auto r2 = eigen_residual(j0, GaussMapKind::Minimal, {1.0, 1.0, std::nullopt});
  CHECK(worst_declared(r2) <= 1e-8);
  CHECK(r2.outcome == Outcome::Pass);

  const auto r3 = eigen_residual(j0, GaussMapKind::Parabolic, {1.0, 1.0, std::nullopt});
  CHECK(r3.coords[2].constancy_deviation > 0.1);
  CHECK(r3.coords[2].verdict == Verdict::NotEigenfunction);
  CHECK(r3.outcome == Outcome::Fail);
}

TEST_CASE("outcome combination") {
  const Grid grid{{0.0, 1.0, 0.0, 1.0}, 11, 5};
  const auto pass = eigen_residual(synthetic(0, 0), GaussMapKind::Minimal, Route::ClosedForm, grid,
                                   {2.0, 5.0, std::nullopt}, 1e-8);
  CHECK(pass.outcome == Outcome::Pass);
  CHECK(pass.coords[0].fitted_lambda.value() == doctest::Approx(2.0));
  CHECK(pass.coords[1].fitted_lambda.value() == doctest::Approx(5.0));
  CHECK(pass.coords[2].fitted_lambda.value() == 0.0);

  const auto wrong = eigen_residual(synthetic(0, 0), GaussMapKind::Minimal, Route::ClosedForm,
                                    grid, {2.5, 5.0, std::nullopt}, 1e-8);
  CHECK(wrong.coords[0].verdict == Verdict::Eigenfunction);
  CHECK_FALSE(wrong.coords[0].passed);
  CHECK(wrong.outcome == Outcome::Fail);

  const auto fuzzy = eigen_residual(synthetic(1e-3, 0), GaussMapKind::Minimal, Route::ClosedForm,
                                    grid, {2.0, 5.0, std::nullopt}, 1e-8);
  CHECK(fuzzy.coords[0].verdict == Verdict::Inconclusive);
  CHECK(fuzzy.outcome == Outcome::Inconclusive);

  const auto undeclared_bad = eigen_residual(synthetic(0, 0.5), GaussMapKind::Minimal,
                                             Route::ClosedForm, grid, {2.0, {}, {}}, 1e-8);
  CHECK(undeclared_bad.coords[1].verdict == Verdict::NotEigenfunction);
  CHECK(undeclared_bad.outcome == Outcome::Fail);

  const auto undeclared_fuzzy = eigen_residual(synthetic(0, 1e-3), GaussMapKind::Minimal,
                                               Route::ClosedForm, grid, {2.0, {}, {}}, 1e-8);
  CHECK(undeclared_fuzzy.outcome == Outcome::Inconclusive);
}

TEST_CASE("trivial coordinates are flagged and not fitted") {
  const auto fam = helicoidal_minimal_family({0.0, 1, 2, 0.3, 0.0, 0.0});
  CHECK(fam.case_label == "2c");
  const auto r = eigen_residual(fam.surface, GaussMapKind::Minimal, fam.lambdas);
  CHECK(r.coords[0].trivial);
  CHECK(r.coords[1].trivial);
  CHECK_FALSE(r.coords[0].fitted_lambda.has_value());
  CHECK(r.coords[0].verdict == Verdict::Trivial);
  CHECK(r.outcome == Outcome::Pass);
}

TEST_CASE("helicoidal family constructors") {
  const auto fig1 = helicoidal_minimal_family({1.0, 0, 0, 0.0, 1.0, 0.25});
  CHECK(fig1.case_label == "1");
  CHECK(fig1.surface.c() == 1.0);
  CHECK(fig1.surface.profile().family() == ProfileFamily::QuadraticLog);

  const auto neg = helicoidal_minimal_family({0.0, -1, -1, 0.2, 0.6, 0.5});
  CHECK(neg.case_label == "2b");
  for (double u : {0.5, 1.0, 2.7}) {
    const double want = 0.2 + 0.6 * oracle::i0(u) + 0.5 * oracle::k0(u);
    CHECK(std::abs(neg.surface.profile()(u) - want) <= 1e-13 * std::abs(want));
  }

  const auto plane = helicoidal_minimal_family({0.0, 1, 2, 0.3, 0.0, 0.0});
  for (double u : {0.5, 1.0, 2.7}) CHECK(plane.surface.profile().eval(u).dz == 0.0);

  CHECK(code_of([] { helicoidal_minimal_family({1.0, 1, 1, 0, 1, 0}); }) ==
        ErrorCode::InconsistentCase);
  CHECK(code_of([] { helicoidal_minimal_family({0.0, 1, 2, 0, 1, 0}); }) ==
        ErrorCode::InconsistentCase);
}

TEST_CASE("helicoidal families round-trip on both routes") {
  for (const auto& fam : helicoidal_cases()) {
    CAPTURE(fam.case_label);
    const auto exact = eigen_residual(fam.surface, GaussMapKind::Minimal, fam.lambdas);
    CHECK(exact.outcome == Outcome::Pass);
    CHECK(worst_declared(exact) <= 1e-8);
    EigenOptions fd;
    fd.route = Route::GenericFiniteDifference;
    const auto numeric = eigen_residual(fam.surface, GaussMapKind::Minimal, fam.lambdas, fd);
    CHECK(numeric.tolerance == kFiniteDifferenceResidualTolerance);
    CHECK(worst_declared(numeric) <= 1e-4);
    EigenOptions ge;
    ge.route = Route::GenericExact;
    CHECK(worst_declared(eigen_residual(fam.surface, GaussMapKind::Minimal, fam.lambdas, ge)) <=
          1e-8);
  }
}

TEST_CASE("parabolic families round-trip on both routes") {
  for (const auto& fam : parabolic_cases()) {
    CAPTURE(fam.case_label);
    const auto exact = eigen_residual(fam.surface, GaussMapKind::Minimal, fam.lambdas);
    CHECK(exact.outcome == Outcome::Pass);
    CHECK(worst_declared(exact) <= 1e-8);
    EigenOptions fd;
    fd.route = Route::GenericFiniteDifference;
    CHECK(worst_declared(eigen_residual(fam.surface, GaussMapKind::Minimal, fam.lambdas, fd)) <=
          1e-4);
  }
}

TEST_CASE("parabolic family examples") {
  using C = ParabolicCase;
  const auto c1 = parabolic_minimal_family({C::Case1, {1, 1, 0, 1, 0}, 0, 0, 1, 0, 0});
  const auto r1 = eigen_residual(c1.surface, GaussMapKind::Minimal, c1.lambdas);
  CHECK(r1.coords[0].sup_residual <= 1e-14);
  CHECK(r1.coords[1].sup_residual <= 1e-14);
  CHECK_FALSE(c1.cylinder.has_value());

  const auto c4b = parabolic_minimal_family({C::Case4b, {1, 1, 0, 0, 0}, 0, 0, 1, 2, 2});
  for (double u : {0.5, 1.3, 2.9}) {
    CHECK(std::abs(c4b.surface.profile()(u) - std::sin(u)) <= 1e-15);
  }
  CHECK(worst_declared(eigen_residual(c4b.surface, GaussMapKind::Minimal, c4b.lambdas)) <= 1e-9);

  const auto c3 = parabolic_minimal_family({C::Case3, {0.4, 1.1, 0.3, 0, 0.7}, 0.5, 0, 0, 1.5, 0});
  const auto r3 = eigen_residual(c3.surface, GaussMapKind::Minimal, c3.lambdas);
  CHECK(r3.coords[0].trivial);
  CHECK(r3.coords[1].sup_residual == 0.0);

  CHECK(code_of([] { parabolic_minimal_family({C::Case1, {1, 1, 0, 1, 0}, 0, 0, 1, 1, 1}); }) ==
        ErrorCode::InconsistentCase);
  CHECK(code_of([] { parabolic_minimal_family({C::Case2b, {0, 1, 0, 0, 0}, 0, 0, 0, 0, 1}); }) ==
        ErrorCode::InconsistentCase);
  CHECK(code_of([] { parabolic_minimal_family({C::Case4a, {1, 1, 0, 0, 0}, 0, 1, 0, 1, 1}); }) ==
        ErrorCode::InconsistentCase);
  CHECK(code_of([] { parabolic_minimal_family({C::Case3, {0, 1, 0, 1, 0}, 0, 0, 0, 1, 0}); }) ==
        ErrorCode::InconsistentCase);
}

TEST_CASE("cylinder cases are affine along their rulings") {
  for (const auto& fam : parabolic_cases()) {
    if (!fam.cylinder) continue;
    CAPTURE(fam.case_label);
    const CylinderChart& ch = *fam.cylinder;
    for (double v : {0.7, 1.1, 1.6}) {
      const IsoPoint p0 = ch.map(v, 0.0);
      for (double w : {-0.6, 0.3, 0.9}) {
        const IsoPoint p = ch.map(v, w);
        CHECK(std::abs(p.x - (p0.x + w * ch.ruling.x1)) <= 1e-10);
        CHECK(std::abs(p.y - (p0.y + w * ch.ruling.x2)) <= 1e-10);
        CHECK(std::abs(p.z - (p0.z + w * ch.ruling.x3)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("perturbing a profile breaks the eigen-equations") {
  for (const auto& fam : helicoidal_cases()) {
    CAPTURE(fam.case_label);
    const HelicoidalSurface bent(fam.surface.c(), fam.surface.profile().with_cubic(0.1),
                                 fam.surface.domain());
    const auto r = eigen_residual(bent, GaussMapKind::Minimal, fam.lambdas);
    CHECK(worst_declared(r) > 1e-3);
    CHECK(r.outcome == Outcome::Fail);
  }
  for (const auto& fam : parabolic_cases()) {
    CAPTURE(fam.case_label);
    const ParabolicRevolutionSurface bent(fam.surface.params(),
                                          fam.surface.profile().with_cubic(0.1),
                                          fam.surface.domain());
    CHECK(worst_declared(eigen_residual(bent, GaussMapKind::Minimal, fam.lambdas)) > 1e-3);
  }
}

TEST_CASE("harmonic minimal normal implies constant mean curvature") {
  const auto cases = helicoidal_cases();
  CHECK(h_spread(cases[0].surface) <= 1e-9);
  CHECK(h_spread(cases[1].surface) <= 1e-9);
  CHECK(h_spread(parabolic_cases()[0].surface) <= 1e-9);
}

TEST_CASE("third-coordinate ODE matches the direct residual") {
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(0.5 + 2.5 * i / 50.0);
  CHECK(g3_ode_residual(constant_profile(1.0), 0.0, 0.0, grid) == 0.0);
  CHECK(g3_ode_residual(quadratic_log_profile(0, 1, 0.25), 1.0, 0.0, grid) > 0.0);
  for (double l3 : {-4.0, -1.0, 1.0, 4.0}) {
    CHECK(g3_ode_residual(bessel_profile(0, 1, 0, 1.0), 0.0, l3, grid) > 1e-2);
  }
  for (const auto& z : {quadratic_log_profile(0, 1, 0.25), bessel_profile(0, 1, 0.3, 1.0),
                        trig_profile(0, 0.4, 0.2, 1.5)}) {
    for (double c : {0.0, 0.7}) {
      const HelicoidalSurface s(c, z);
      for (double l3 : {0.0, 1.5}) {
        for (double u : grid) {
          const InvariantClosedForms cf = helicoidal_closed_forms(s, {u, 0.4});
          const double direct = u * (cf.lap_gauss_map.x3 + l3 * cf.gauss_map.x3);
          CHECK(std::abs(g3_ode_residual_at(z, c, l3, u) - direct) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("lambda3 = 4 lambda family") {
  const auto f = lambda3_family(0.0, 1.0, 1.0, 0.0, 0.0);
  for (double u = 0.5; u <= 3.0; u += 0.1) {
    const InvariantClosedForms cf = parabolic_closed_forms(f.surface, {u, 0.2});
    CHECK(std::abs(f.surface.profile()(u) - std::sqrt(2.0) * std::sin(u)) <= 1e-15);
    CHECK(std::abs(cf.gauss_map.x3 - -std::cos(2 * u) / 2) <= 1e-12);
    CHECK(std::abs(cf.lap_gauss_map.x3 - 2 * std::cos(2 * u)) <= 1e-10);
    CHECK(std::abs(-cf.lap_gauss_map.x3 - 4 * cf.gauss_map.x3) <= 1e-10);
  }
  const ProfileSpec& ps = f.surface.profile().spec();
  CHECK(std::abs(1.0 * (ps.z1 * ps.z1 + ps.z2 * ps.z2) - 2.0) <= 1e-14);

  const auto g = lambda3_family(0.0, 1.0, -1.0, 0.0, 0.0);
  for (double u : {0.5, 1.7, 3.0}) {
    CHECK(std::abs(g.surface.profile()(u) - std::sqrt(2.0) * std::sinh(u)) <= 1e-13);
  }
  const auto rg = eigen_residual(g.surface, GaussMapKind::Parabolic, g.lambdas);
  CHECK(g.lambdas[2].value() == -4.0);
  CHECK(worst_declared(rg) <= 1e-8);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-kPi, kPi);
  for (double lambda : {1.0, -1.0, 2.0, -2.0}) {
    for (double a : {0.0, 0.7}) {
      const auto fam = lambda3_family(a, 1.3, lambda, d(rng), 0.4);
      const auto r = eigen_residual(fam.surface, GaussMapKind::Parabolic, fam.lambdas);
      CHECK(r.outcome == Outcome::Pass);
      CHECK(worst_declared(r) <= 1e-8);
      CHECK(r.coords[2].fitted_lambda.value() / lambda == doctest::Approx(4.0).epsilon(1e-8));
    }
  }
  CHECK(code_of([] { lambda3_family(0, 1, 0, 0, 0); }) == ErrorCode::InvalidFamilyParams);
}

TEST_CASE("linear profiles with no shear have a constant parabolic Gauss map") {
  const auto fam = linear_profile_family(0.5, 1.2, 0.7, 0.1, 0.9, 0.0);
  const auto r = eigen_residual(fam.surface, GaussMapKind::Parabolic, fam.lambdas);
  CHECK(r.outcome == Outcome::Pass);
  for (ParamPoint p : Grid{fam.surface.domain(), 41, 17}.points()) {
    const IsoVector lap = parabolic_closed_forms(fam.surface, p).lap_gauss_map;
    CHECK(std::abs(lap.x1) + std::abs(lap.x2) + std::abs(lap.x3) <= 1e-10);
  }
  CHECK(code_of([] { linear_profile_family(0, 1, 0, 0, 1, 2.0); }) == ErrorCode::InconsistentCase);
}

TEST_CASE("boundedness families") {
  const auto both = boundedness_family({BoundednessRegime::Both, 1.0, 0.0, 0.3, 1.0, 0.0});
  for (double u : {0.5, 2.0}) {
    CHECK(std::abs(both.surface.profile()(u) - (0.3 + oracle::j0(u))) <= 1e-14);
  }
  const auto bp = probe_boundedness(both.surface.profile(), 0.3);
  CHECK(bp.bounded_near_axis);
  CHECK(bp.bounded_at_infinity);

  const auto near = boundedness_family({BoundednessRegime::NearAxis, 0.0, 0.0, 0.2, 1.5, 0.0});
  for (double u : {0.5, 2.0}) CHECK(near.surface.profile()(u) == doctest::Approx(0.2 + 1.5 * u * u));
  const auto np = probe_boundedness(near.surface.profile(), 0.2);
  CHECK(np.bounded_near_axis);
  CHECK_FALSE(np.bounded_at_infinity);

  const auto inf = boundedness_family({BoundednessRegime::AtInfinity, -1.0, 0.0, 0.4, 0.0, 1.0});
  CHECK(std::abs(inf.surface.profile()(100.0) - 0.4) < 1e-10);
  CHECK(std::abs(inf.surface.profile()(100.0) - 0.4 - oracle::k0(100.0)) < 1e-20);
  const auto ip = probe_boundedness(inf.surface.profile(), 0.4);
  CHECK(ip.bounded_at_infinity);
  CHECK_FALSE(ip.bounded_near_axis);

  for (const auto& fam : {both, near, inf}) {
    CHECK(eigen_residual(fam.surface, GaussMapKind::Minimal, fam.lambdas).outcome == Outcome::Pass);
  }

  using R = BoundednessRegime;
  CHECK(code_of([] { boundedness_family({R::NearAxis, 1.0, 0.0, 0, 1, 1}); }) ==
        ErrorCode::InconsistentCase);
  CHECK(code_of([] { boundedness_family({R::AtInfinity, -1.0, 0.0, 0, 1, 0}); }) ==
        ErrorCode::InconsistentCase);
  CHECK(code_of([] { boundedness_family({R::Both, -1.0, 0.0, 0, 1, 0}); }) ==
        ErrorCode::InconsistentCase);
  CHECK(code_of([] { boundedness_family({R::Both, 1.0, 1.0, 0, 1, 0}); }) ==
        ErrorCode::InconsistentCase);
}

TEST_CASE("boundary spectra") {
  const Spectrum mixed = boundary_spectrum({SpectrumKind::MixedBessel, 1.0, 0.0, 3});
  const auto zeros = oracle::j0_zeros(3);
  REQUIRE(mixed.modes.size() == 3);
  for (int n = 0; n < 3; ++n) {
    CHECK(std::abs(mixed.modes[n].lambda - zeros[n] * zeros[n]) <= 1e-8);
  }
  CHECK(std::abs(mixed.modes[0].lambda - 5.783185962946785) <= 1e-8);
  CHECK(std::abs(mixed.modes[1].lambda - 30.4713) <= 1e-4);
  CHECK(std::abs(mixed.modes[2].lambda - 74.8870) <= 1e-4);

  const Spectrum homo = boundary_spectrum({SpectrumKind::Homogeneous, kPi, 0.0, 10});
  for (const auto& m : homo.modes) CHECK(std::abs(m.big_lambda - m.n * m.n) <= 1e-12);

  const Spectrum shifted =
      boundary_spectrum({SpectrumKind::Homogeneous, 2.0, 0.7, 4, 0.5, 1.5});
  for (const auto& m : shifted.modes) {
    CHECK(std::abs(m.lambda - m.big_lambda * (0.25 + 2.25) / 2.25) <= 1e-12 * m.lambda);
    for (double u : {0.9, 1.6, 2.5}) {
      CHECK(std::abs(m.profile(u) - std::sin(std::sqrt(m.big_lambda) * (u - 0.7))) <= 1e-12);
    }
  }

  const Spectrum per = boundary_spectrum({SpectrumKind::Periodic, 2 * kPi, 0.3, 2});
  CHECK(per.modes[0].big_lambda == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(per.modes[1].big_lambda == doctest::Approx(4.0).epsilon(1e-14));

  for (const Spectrum* s : {&mixed, &homo, &shifted, &per}) {
    for (std::size_t i = 0; i < s->modes.size(); ++i) {
      const auto& m = s->modes[i];
      CHECK(m.lambda > 0.0);
      if (i > 0) CHECK(m.lambda > s->modes[i - 1].lambda);
      CHECK(m.boundary_residual <= 1e-9);
      const auto r = verify_spectrum_mode(*s, m);
      CHECK(r.outcome == Outcome::Pass);
      CHECK(worst_declared(r) <= 1e-8);
    }
  }
  CHECK(code_of([] { boundary_spectrum({SpectrumKind::Homogeneous, 1.0, 0.0, 0}); }) ==
        ErrorCode::InvalidFamilyParams);
  CHECK(code_of([] { boundary_spectrum({SpectrumKind::Periodic, -1.0, 0.0, 2}); }) ==
        ErrorCode::InvalidFamilyParams);
}
