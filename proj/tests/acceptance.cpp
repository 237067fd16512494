// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-isogeo-executable> <scratch-dir>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isogeo/bessel.hpp"
#include "isogeo/errors.hpp"
#include "isogeo/harmonic.hpp"
#include "isogeo/invariant.hpp"
#include "isogeo/spectral.hpp"
#include "isogeo/surface.hpp"
#include "oracles.hpp"

using namespace isogeo;
namespace fs = std::filesystem;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

double worst_declared(const EigenResidualReport& r) {
  double w = 0.0;
  for (const auto& c : r.coords) {
    if (c.declared_lambda) w = std::max(w, c.sup_residual);
  }
  return w;
}

double max_abs(const IsoVector& v) {
  return std::max({std::abs(v.x1), std::abs(v.x2), std::abs(v.x3)});
}

double rel(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

double rel(const IsoVector& a, const IsoVector& b) {
  return std::max({rel(a.x1, b.x1), rel(a.x2, b.x2), rel(a.x3, b.x3)});
}

// --- 1 -----------------------------------------------------------------------------

Check helicoidal_round_trip() {
  const std::vector<HelicoidalMinimalSpec> specs = {
      {1.0, 0, 0, 0.0, 1.0, 0.25}, {0.0, 0, 0, 0.3, -0.8, 0.5}, {0.0, 1, 1, 0.0, 1.0, 0.4},
      {0.0, -1, -1, 0.2, 0.6, 0.5}, {0.0, 1, 2, 0.3, 0.0, 0.0}};
  Check v;
  double worst = 0.0;
  double weakest_control = 1e300;
  for (const auto& spec : specs) {
    const auto fam = helicoidal_minimal_family(spec);
    const auto r = eigen_residual(fam.surface, GaussMapKind::Minimal, fam.lambdas);
    worst = std::max(worst, worst_declared(r));
    v.ok = v.ok && r.outcome == Outcome::Pass && worst_declared(r) <= 1e-8;
    const HelicoidalSurface bent(fam.surface.c(), fam.surface.profile().with_cubic(0.1),
                                 fam.surface.domain());
    const double control = worst_declared(eigen_residual(bent, GaussMapKind::Minimal, fam.lambdas));
    weakest_control = std::min(weakest_control, control);
    v.ok = v.ok && control > 1e-3;
  }
  v.detail = "cases 1, 2a, 2b(+1), 2b(-1), 2c: max residual " + sci(worst) +
             ", smallest perturbed residual " + sci(weakest_control);
  return v;
}

// --- 2 -----------------------------------------------------------------------------

Check cmc_consequence() {
  Check v;
  double spread = 0.0;
  double off = 0.0;
  for (auto [c, z0, z1, z2] : std::vector<std::array<double, 4>>{
           {1.0, 0.0, 1.0, 0.25}, {2.0, 0.5, -0.3, 1.0}, {-0.7, 0.0, 2.0, -0.5}}) {
    const auto fam = helicoidal_minimal_family({c, 0, 0, z0, z1, z2});
    const ParametricSurface ps = fam.surface.parametric();
    double lo = 1e300;
    double hi = -1e300;
    for (ParamPoint p : Grid{fam.surface.domain(), 41, 17}.points()) {
      const double h = shape_and_curvatures(ps, p).H;
      const double hc = helicoidal_closed_forms(fam.surface, p).H;
      lo = std::min({lo, h, hc});
      hi = std::max({hi, h, hc});
      off = std::max({off, std::abs(h - 2 * z1), std::abs(hc - 2 * z1)});
    }
    spread = std::max(spread, hi - lo);
  }
  v.ok = spread <= 1e-9 && off <= 1e-10;
  v.detail = "max H spread " + sci(spread) + ", max |H - 2 z1| " + sci(off);
  return v;
}

// --- 3 -----------------------------------------------------------------------------

Check no_third_coordinate_eigenvalue() {
  Check v;
  const std::vector<HelicoidalSurface> surfaces = {
      HelicoidalSurface(0.0, bessel_profile(0.0, 1.0, 0.0, 1.0)),
      HelicoidalSurface(0.0, bessel_profile(0.2, 1.0, 0.5, 1.0)),
      HelicoidalSurface(0.0, quadratic_log_profile(0.0, 1.0, 0.25)),
      HelicoidalSurface(1.0, quadratic_log_profile(0.0, 1.0, 0.0)),
      HelicoidalSurface(1.0, quadratic_log_profile(0.0, 1.0, 0.25)),
      HelicoidalSurface(0.5, quadratic_log_profile(0.1, 0.0, -0.6))};
  double least_deviation = 1e300;
  double least_residual = 1e300;
  for (const auto& s : surfaces) {
    const GaussSamples data = sample_gauss_map(closed_form_sampler(s, GaussMapKind::Parabolic),
                                               Grid{s.domain(), 41, 17});
    const CoordinateReport c = analyse_coordinate(data, 2, std::nullopt, kExactResidualTolerance);
    least_deviation = std::min(least_deviation, c.constancy_deviation);
    for (double l3 : {0.0, 1.0, -1.0, 2.0, -2.0, 4.0, -4.0}) {
      least_residual = std::min(least_residual, coordinate_residual(data, 2, l3));
    }
  }
  double flat = 0.0;
  for (auto [a, b, c, z0, z1] : std::vector<std::array<double, 5>>{
           {0.0, 1.0, 0.0, 0.0, 1.0}, {0.7, 1.3, 0.4, -0.2, 2.0}, {-1.0, 0.5, 2.0, 1.0, -0.5}}) {
    const auto fam = linear_profile_family(a, b, c, z0, z1, 0.0);
    for (ParamPoint p : Grid{fam.surface.domain(), 41, 17}.points()) {
      flat = std::max(flat, max_abs(parabolic_closed_forms(fam.surface, p).lap_gauss_map));
      flat = std::max(flat, max_abs(gauss_map_laplacians(fam.surface.parametric(), p).lap_gauss_map));
    }
  }
  v.ok = least_deviation > 1e-2 && least_residual > 1e-2 && flat <= 1e-10;
  v.detail = "min constancy deviation " + sci(least_deviation) + ", min trial residual " +
             sci(least_residual) + ", linear-profile sup|lap G| " + sci(flat);
  return v;
}

// --- 4 -----------------------------------------------------------------------------

Check parabolic_round_trip() {
  using C = ParabolicCase;
  const std::vector<ParabolicMinimalSpec> specs = {
      {C::Case1, {1, 1, 0, 1, 0}, 0, 0, 1, 0, 0},
      {C::Case2a, {0, 1.5, 0, 0, 0}, 0.2, 0.4, -0.6, 0, 3},
      {C::Case2b, {0.8, 1.2, 0.5, 0.6, 0}, 0.1, 0, 0, 0, -2},
      {C::Case3, {0.4, 1.1, 0.3, 0, 0.7}, 0.5, 0, 0, 1.5, 0},
      {C::Case4a, {0, 0.9, 0, 0, 0}, 0.1, 0.5, 0.3, 2, -1},
      {C::Case4b, {1, 1, 0, 0, 0}, 0, 0, 1, 2, 2}};
  Check v;
  double worst = 0.0;
  double affine = 0.0;
  int cylinders = 0;
  for (const auto& spec : specs) {
    const auto fam = parabolic_minimal_family(spec);
    const auto r = eigen_residual(fam.surface, GaussMapKind::Minimal, fam.lambdas);
    worst = std::max(worst, worst_declared(r));
    v.ok = v.ok && r.outcome == Outcome::Pass && worst_declared(r) <= 1e-8;
    const bool expect_cylinder = spec.which != C::Case1;
    v.ok = v.ok && fam.cylinder.has_value() == expect_cylinder;
    if (!fam.cylinder) continue;
    ++cylinders;
    const CylinderChart& ch = *fam.cylinder;
    for (double p = 0.6; p <= 2.9; p += 0.23) {
      const IsoPoint base = ch.map(p, 0.0);
      for (double w = -0.9; w <= 0.9; w += 0.3) {
        const IsoPoint q = ch.map(p, w);
        affine = std::max({affine, std::abs(q.x - base.x - w * ch.ruling.x1),
                           std::abs(q.y - base.y - w * ch.ruling.x2),
                           std::abs(q.z - base.z - w * ch.ruling.x3)});
      }
    }
  }
  v.ok = v.ok && cylinders == 5 && affine <= 1e-10;
  v.detail = "six cases max residual " + sci(worst) + "; " + std::to_string(cylinders) +
             " cylinders, max deviation from ruling " + sci(affine);
  return v;
}

// --- 5 -----------------------------------------------------------------------------

Check lambda3_law() {
  Check v;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (double lambda : {1.0, -1.0, 2.0, -2.0}) {
    for (auto [a, b] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {0.6, 1.2}}) {
      const auto fam = lambda3_family(a, b, lambda, phase(rng), 0.3);
      const bool declared = fam.lambdas[0] == lambda && fam.lambdas[1] == lambda &&
                            fam.lambdas[2] == 4.0 * lambda;
      const auto r = eigen_residual(fam.surface, GaussMapKind::Parabolic, fam.lambdas);
      worst = std::max(worst, worst_declared(r));
      v.ok = v.ok && declared && r.outcome == Outcome::Pass && worst_declared(r) <= 1e-8;
    }
  }
  const auto hand = lambda3_family(0.0, 1.0, 1.0, 0.0, 0.0);
  double pointwise = 0.0;
  for (ParamPoint p : Grid{hand.surface.domain(), 41, 17}.points()) {
    const InvariantClosedForms cf = parabolic_closed_forms(hand.surface, p);
    const double lap = gauss_map_laplacians(hand.surface.parametric(), p).lap_gauss_map.x3;
    pointwise = std::max({pointwise, std::abs(cf.lap_gauss_map.x3 - 2 * std::cos(2 * p.u)),
                          std::abs(lap - 2 * std::cos(2 * p.u)),
                          std::abs(-cf.lap_gauss_map.x3 - 4 * cf.gauss_map.x3)});
  }
  v.ok = v.ok && pointwise <= 1e-10;
  v.detail = "max residual " + sci(worst) + " over lambda in {+-1, +-2}; hand instance error " +
             sci(pointwise);
  return v;
}

// --- 6 -----------------------------------------------------------------------------

Check spectra() {
  Check v;
  const auto zeros = oracle::j0_zeros(3);
  const Spectrum mixed = boundary_spectrum({SpectrumKind::MixedBessel, 1.0, 0.0, 3});
  const double first = mixed.modes[0].lambda;
  v.ok = std::abs(first - 5.783185962946785) <= 1e-8 && std::abs(first - zeros[0] * zeros[0]) <= 1e-8;

  const Spectrum homo = boundary_spectrum({SpectrumKind::Homogeneous, std::numbers::pi, 0.0, 10});
  double exact = 0.0;
  for (const auto& m : homo.modes) exact = std::max(exact, std::abs(m.big_lambda - m.n * m.n));
  v.ok = v.ok && homo.modes.size() == 10 && exact <= 1e-12;

  const Spectrum periodic = boundary_spectrum({SpectrumKind::Periodic, 2 * std::numbers::pi, 0.2, 4});
  const Spectrum shifted = boundary_spectrum({SpectrumKind::Homogeneous, 2.0, 0.5, 5, 0.7, 1.3});
  double boundary = 0.0;
  double eigen = 0.0;
  for (const Spectrum* s : {&mixed, &homo, &periodic, &shifted}) {
    for (const auto& m : s->modes) {
      boundary = std::max(boundary, m.boundary_residual);
      const auto r = verify_spectrum_mode(*s, m);
      eigen = std::max(eigen, worst_declared(r));
      v.ok = v.ok && r.outcome == Outcome::Pass;
    }
  }
  v.ok = v.ok && boundary <= 1e-9 && eigen <= 1e-8;
  v.detail = "lambda_1 = " + fixed(first) + ", |Lambda_n - n^2| " +
             sci(exact) + ", boundary " + sci(boundary) + ", eigen " + sci(eigen);
  return v;
}

// --- 7 -----------------------------------------------------------------------------

Check harmonic_characterisation() {
  Check v;
  const Domain box{-1.0, 1.0, -1.0, 1.0};
  const Grid grid{box, 15, 15};
  const double tol = 1e-8;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  int disagreements = 0;
  double identity = 0.0;
  std::array<int, 3> seen{};
  for (int n = 0; n < 20; ++n) {
    Polynomial2 poly;
    const int degree = n % 4 == 0 ? 1 : (n % 4 == 1 ? 2 : 4);
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; i + j <= degree; ++j) poly.c[i][j] = d(rng);
    }
    if (n % 8 == 1) poly.c[0][2] = -poly.c[2][0];
    const GraphSurface g = polynomial_graph(poly, box);
    HarmonicClass got;
    try {
      got = classify_harmonic(g, grid, tol).result;
    } catch (const Error&) {
      ++disagreements;
      continue;
    }
    double lap_n = 0.0;
    double lap_g = 0.0;
    double hess = 0.0;
    double hmin = 1e300;
    double hmax = -1e300;
    const ParametricSurface ps = g.parametric();
    for (ParamPoint p : grid.points()) {
      const GaussLaplacians gl = gauss_map_laplacians(ps, p);
      lap_n = std::max(lap_n, max_abs(gl.lap_minimal_normal));
      lap_g = std::max(lap_g, max_abs(gl.lap_gauss_map));
      const GraphJet j = g.jet(p);
      hess = std::max({hess, std::abs(j.d2[0]), std::abs(j.d2[1]), std::abs(j.d2[2])});
      const double h = shape_and_curvatures(ps, p).H;
      hmin = std::min(hmin, h);
      hmax = std::max(hmax, h);

      const double hu = 0.5 * (j.d3[0] + j.d3[2]);
      const double hv = 0.5 * (j.d3[1] + j.d3[3]);
      const double tr = j.d2[0] * j.d2[0] + 2 * j.d2[1] * j.d2[1] + j.d2[2] * j.d2[2];
      const IsoVector want_g =
          -2.0 * IsoVector{hu, hv, hu * j.d1[0] + hv * j.d1[1]} - tr * kIsotropicNormal;
      const IsoVector want_x = 2.0 * h * kIsotropicNormal;
      identity = std::max({identity, rel(gl.lap_gauss_map, want_g),
                           rel(position_laplacian(ps, p), want_x)});
    }
    const bool cmc = hmax - hmin < tol * (1.0 + std::max(std::abs(hmin), std::abs(hmax)));
    const bool harmonic_n = lap_n < tol;
    const bool harmonic_g = lap_g < tol;
    const bool plane = hess < tol;
    if (harmonic_n != cmc || harmonic_g != plane) ++disagreements;
    const HarmonicClass want = plane ? HarmonicClass::ParabolicNormalHarmonic_Plane
                                     : (cmc ? HarmonicClass::MinimalNormalHarmonic_CMC
                                            : HarmonicClass::Neither);
    if (got != want) ++disagreements;
    ++seen[static_cast<std::size_t>(want)];
  }
  v.ok = disagreements == 0 && identity <= 1e-8 && seen[0] > 0 && seen[1] > 0 && seen[2] > 0;
  v.detail = "20 graphs (" + std::to_string(seen[0]) + " CMC, " + std::to_string(seen[1]) +
             " plane, " + std::to_string(seen[2]) + " neither), " +
             std::to_string(disagreements) + " disagreements, identity error " + sci(identity);
  return v;
}

// --- 8 -----------------------------------------------------------------------------

template <class Surface, class Closed>
std::pair<double, double> engine_vs_closed(const Surface& s, Closed closed) {
  std::pair<double, double> worst{0.0, 0.0};
  for (auto mode : {DerivativeMode::ClosedForm, DerivativeMode::FiniteDifference}) {
    const ParametricSurface ps = s.parametric(mode);
    const Domain box =
        mode == DerivativeMode::ClosedForm ? s.domain() : s.domain().inset(ps.stencil_reach());
    double& w = mode == DerivativeMode::ClosedForm ? worst.first : worst.second;
    for (ParamPoint p : Grid{box, 20, 20}.points()) {
      const InvariantClosedForms cf = closed(s, p);
      const FundamentalForms f = fundamental_forms(ps, p);
      const ShapeData sd = shape_and_curvatures(ps, p);
      const GaussLaplacians gl = gauss_map_laplacians(ps, p);
      w = std::max({w, rel(f.g11, cf.forms.g11), rel(f.g12, cf.forms.g12), rel(f.g22, cf.forms.g22),
                    rel(f.h11, cf.forms.h11), rel(f.h12, cf.forms.h12), rel(f.h22, cf.forms.h22),
                    rel(sd.K, cf.K), rel(sd.H, cf.H), rel(gl.minimal_normal, cf.minimal_normal),
                    rel(gl.gauss_map, cf.gauss_map),
                    rel(gl.lap_minimal_normal, cf.lap_minimal_normal),
                    rel(gl.lap_gauss_map, cf.lap_gauss_map)});
    }
  }
  return worst;
}

Check cross_implementation() {
  const std::vector<ProfileCurve> profiles = {
      quadratic_log_profile(0.3, 1.0, 0.25), quadratic_profile(-0.2, 0.7, 0.4),
      bessel_profile(0.0, 1.0, 0.5, 1.0),    bessel_profile(0.1, 0.3, 0.2, -1.5),
      trig_profile(0.0, 0.6, -0.4, 2.0),     hyper_profile(0.2, 0.1, 0.3, -0.7)};
  double exact = 0.0;
  double fd = 0.0;
  for (const auto& z : profiles) {
    for (double c : {0.0, 0.8}) {
      const auto [e, f] = engine_vs_closed(HelicoidalSurface(c, z), [](const auto& s, ParamPoint p) {
        return helicoidal_closed_forms(s, p);
      });
      exact = std::max(exact, e);
      fd = std::max(fd, f);
    }
    for (const ParabolicParams& q :
         {ParabolicParams{0.0, 1.0, 0.0, 0.0, 0.0}, ParabolicParams{0.7, 1.3, 0.4, -0.5, 0.6}}) {
      const auto [e, f] =
          engine_vs_closed(ParabolicRevolutionSurface(q, z), [](const auto& s, ParamPoint p) {
            return parabolic_closed_forms(s, p);
          });
      exact = std::max(exact, e);
      fd = std::max(fd, f);
    }
  }
  return {exact <= 1e-8 && fd <= 1e-4,
          "closed-form derivatives " + sci(exact) + ", finite differences " + sci(fd)};
}

// --- 9 -----------------------------------------------------------------------------

Check special_functions() {
  namespace bs = isogeo::bessel;
  double wronskian = 0.0;
  for (double x = 0.5; x <= 40.0; x += 0.01) {
    wronskian = std::max(wronskian, std::abs(bs::j0(x) * -bs::y1(x) - bs::y0(x) * -bs::j1(x) -
                                             2.0 / (std::numbers::pi * x)));
  }
  double ode = 0.0;
  for (double x = 0.3; x <= 45.0; x += 0.037) {
    for (auto fam : {bs::Family::J, bs::Family::Y}) {
      ode = std::max(ode, std::abs(x * bs::deriv2(fam, x) + bs::deriv(fam, x) +
                                   x * bs::eval({fam, bs::Order::Zero}, x)));
    }
    if (x <= 20.0) {
      for (auto fam : {bs::Family::I, bs::Family::K}) {
        const double f = bs::eval({fam, bs::Order::Zero}, x);
        ode = std::max(ode, std::abs(x * bs::deriv2(fam, x) + bs::deriv(fam, x) - x * f) /
                                (1.0 + std::abs(f)));
      }
    }
  }
  const auto ref = oracle::j0_zeros(20);
  const auto z = bs::j0_zeros(20);
  double zero_err = 0.0;
  double at_zero = 0.0;
  bool increasing = true;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i < 3) zero_err = std::max(zero_err, std::abs(z[i] - ref[i]));
    at_zero = std::max(at_zero, std::abs(bs::j0(z[i])));
    if (i > 0) increasing = increasing && z[i] > z[i - 1];
  }
  const double spacing = std::abs(z[19] - z[18] - std::numbers::pi);
  double value = 0.0;
  for (double x = 0.05; x <= 50.0; x += 0.173) {
    const double env = std::sqrt(2.0 / (std::numbers::pi * x));
    value = std::max(value, std::abs(bs::j0(x) - oracle::j0(x)) / std::max(std::abs(oracle::j0(x)), env));
    value = std::max(value, std::abs(bs::y0(x) - oracle::y0(x)) / std::max(std::abs(oracle::y0(x)), env));
    value = std::max(value, std::abs(bs::i0(x) / oracle::i0(x) - 1.0));
    value = std::max(value, std::abs(bs::k0(x) / oracle::k0(x) - 1.0));
  }
  return {wronskian <= 1e-10 && ode <= 1e-8 && zero_err <= 1e-10 && at_zero <= 1e-9 &&
              increasing && spacing < 1e-3 && value <= 1e-12,
          "Wronskian " + sci(wronskian) + ", ODE " + sci(ode) + ", first zeros " + sci(zero_err) +
              ", |J0(u_n)| " + sci(at_zero) + ", values " + sci(value)};
}

// --- 10 ----------------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Check determinism(const std::string& exe, const fs::path& scratch) {
  fs::create_directories(scratch);
  const fs::path config = scratch / "determinism.json";
  const fs::path stem = scratch / "determinism_report";
  {
    std::ofstream f(config);
    f << "{\"command\": \"verify\", \"family\": \"parabolic-minimal\", \"params\": {\"case\": "
         "\"4b\", \"a\": 1, \"b\": 1, \"z2\": 1, \"lambda1\": 2, \"lambda2\": 2}, \"grid\": [41, "
         "17], \"out\": \""
      << stem.generic_string() << "\"}\n";
  }
  const std::string cmd = "\"" + exe + "\" verify --config \"" + config.string() + "\"";
  std::vector<std::string> reports;
  for (int run = 0; run < 2; ++run) {
    fs::remove(stem.string() + ".json");
    if (std::system(cmd.c_str()) != 0) return {false, "isogeo verify exited non-zero"};
    reports.push_back(slurp(stem.string() + ".json"));
  }
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  return {same, "two runs, " + std::to_string(reports[0].size()) + " bytes, " +
                    (same ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <isogeo-executable> <scratch-dir>\n");
    return 2;
  }
  const std::string exe = argv[1];
  const fs::path scratch = argv[2];
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"helicoidal minimal-map families round-trip", helicoidal_round_trip},
      {"case-1 surfaces have constant H = 2 z1", cmc_consequence},
      {"no eigenvalue for the parabolic third coordinate", no_third_coordinate_eigenvalue},
      {"parabolic revolution families round-trip and cylinders", parabolic_round_trip},
      {"lambda3 = 4 lambda law", lambda3_law},
      {"boundary-value spectra", spectra},
      {"harmonic Gauss maps of graphs", harmonic_characterisation},
      {"engine agrees with closed forms", cross_implementation},
      {"Bessel functions and J0 zeros", special_functions},
      {"verify reports are deterministic", [&] { return determinism(exe, scratch); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.ok) ++failed;
    std::printf("AC%-2zu %s  %s: %s\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
