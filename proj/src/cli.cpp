#include "isogeo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "isogeo/errors.hpp"
#include "isogeo/harmonic.hpp"
#include "isogeo/invariant.hpp"
#include "isogeo/spectral.hpp"
#include "isogeo/surface.hpp"

namespace isogeo::cli {
namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void bad_input(const std::string& what) {
  throw Error(ErrorCode::InvalidFamilyParams, what);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ojson optional_number(const std::optional<double>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

// Typed access to the family parameters; records every value actually used
// (defaults included) and rejects keys nobody asked for.
class Params {
 public:
  explicit Params(const ojson& j) : j_(j) {
    if (!j_.is_object()) bad_input("params must be a JSON object");
  }

  double num(const std::string& key, double def) {
    const auto v = opt_num(key);
    const double out = v.value_or(def);
    resolved_[key] = out;
    return out;
  }

  std::optional<double> opt_num(const std::string& key) {
    used_.insert(key);
    const auto it = j_.find(key);
    if (it == j_.end()) return std::nullopt;
    if (!it->is_number()) bad_input("parameter '" + key + "' must be a number");
    const double v = it->get<double>();
    resolved_[key] = v;
    return v;
  }

  int integer(const std::string& key, int def) {
    const double v = num(key, def);
    if (v != static_cast<double>(static_cast<int>(v))) {
      bad_input("parameter '" + key + "' must be an integer");
    }
    resolved_[key] = static_cast<int>(v);
    return static_cast<int>(v);
  }

  std::string str(const std::string& key, const std::string& def) {
    used_.insert(key);
    const auto it = j_.find(key);
    std::string out = def;
    if (it != j_.end()) {
      if (it->is_string()) out = it->get<std::string>();
      else if (it->is_number()) out = format_double(it->get<double>());
      else bad_input("parameter '" + key + "' must be a string");
    }
    resolved_[key] = out;
    return out;
  }

  Domain domain(const Domain& def) {
    return {num("u_min", def.u_min), num("u_max", def.u_max), num("t_min", def.t_min),
            num("t_max", def.t_max)};
  }

  void finish() const {
    for (const auto& item : j_.items()) {
      if (!used_.count(item.key())) bad_input("unknown parameter '" + item.key() + "'");
    }
  }

  const ojson& resolved() const { return resolved_; }

 private:
  ojson j_;
  std::set<std::string> used_;
  ojson resolved_ = ojson::object();
};

struct Subject {
  std::string family;
  std::string case_label;
  std::optional<HelicoidalSurface> helicoidal;
  std::optional<ParabolicRevolutionSurface> parabolic;
  std::optional<GraphSurface> graph;
  DeclaredLambdas lambdas{};
  std::optional<CylinderChart> cylinder;
  std::optional<double> lambda3_base;
  ojson params;
};

ProfileCurve read_profile(Params& p) {
  const std::string name = p.str("profile", "quadratic");
  ProfileSpec s;
  if (name == "quadratic_log") s.family = ProfileFamily::QuadraticLog;
  else if (name == "quadratic") s.family = ProfileFamily::Quadratic;
  else if (name == "bessel") s.family = ProfileFamily::BesselCombo;
  else if (name == "trig") s.family = ProfileFamily::TrigCombo;
  else if (name == "hyper") s.family = ProfileFamily::HyperCombo;
  else bad_input("unknown profile '" + name + "'");
  s.z0 = p.num("z0", 0.0);
  s.z1 = p.num("z1", 0.0);
  s.z2 = p.num("z2", 0.0);
  if (s.family == ProfileFamily::BesselCombo || s.family == ProfileFamily::TrigCombo ||
      s.family == ProfileFamily::HyperCombo) {
    s.lambda = p.num("lambda", 1.0);
  }
  ProfileCurve curve = make_profile(s);
  const double cubic = p.num("cubic", 0.0);
  return cubic != 0.0 ? curve.with_cubic(cubic) : curve;
}

void read_declared(Params& p, DeclaredLambdas& lambdas, bool all) {
  for (int i = 0; i < 3; ++i) {
    if (!all && i < 2) continue;
    if (auto v = p.opt_num("lambda" + std::to_string(i + 1))) lambdas[i] = *v;
  }
}

ParabolicCase parse_case(const std::string& s) {
  if (s == "1") return ParabolicCase::Case1;
  if (s == "2a") return ParabolicCase::Case2a;
  if (s == "2b") return ParabolicCase::Case2b;
  if (s == "3") return ParabolicCase::Case3;
  if (s == "4a") return ParabolicCase::Case4a;
  if (s == "4b") return ParabolicCase::Case4b;
  bad_input("unknown case '" + s + "' (expected 1, 2a, 2b, 3, 4a, 4b)");
}

BoundednessRegime parse_regime(const std::string& s) {
  if (s == "near_axis") return BoundednessRegime::NearAxis;
  if (s == "at_infinity") return BoundednessRegime::AtInfinity;
  if (s == "both") return BoundednessRegime::Both;
  bad_input("unknown regime '" + s + "' (expected near_axis, at_infinity, both)");
}

void take(Subject& s, HelicoidalFamily f) {
  s.helicoidal = f.surface;
  s.lambdas = f.lambdas;
  s.case_label = f.case_label;
}

void take(Subject& s, ParabolicFamily f) {
  s.parabolic = f.surface;
  s.lambdas = f.lambdas;
  s.case_label = f.case_label;
  s.cylinder = f.cylinder;
}

Subject build_subject(const RunConfig& config) {
  Params p(config.params);
  Subject s;
  s.family = config.family;
  const std::string& fam = config.family;
  if (fam == "helicoidal-minimal") {
    HelicoidalMinimalSpec spec;
    spec.c = p.num("c", 0.0);
    spec.lambda1 = p.num("lambda1", 0.0);
    spec.lambda2 = p.num("lambda2", 0.0);
    spec.z0 = p.num("z0", 0.0);
    spec.z1 = p.num("z1", 0.0);
    spec.z2 = p.num("z2", 0.0);
    spec.domain = p.domain(kDefaultHelicoidalDomain);
    take(s, helicoidal_minimal_family(spec));
    read_declared(p, s.lambdas, false);
  } else if (fam == "boundedness") {
    BoundednessSpec spec;
    spec.regime = parse_regime(p.str("regime", "both"));
    spec.lambda = p.num("lambda", 1.0);
    spec.c = p.num("c", 0.0);
    spec.z0 = p.num("z0", 0.0);
    spec.z1 = p.num("z1", 1.0);
    spec.z2 = p.num("z2", 0.0);
    spec.domain = p.domain(kDefaultHelicoidalDomain);
    take(s, boundedness_family(spec));
  } else if (fam == "parabolic-minimal") {
    ParabolicMinimalSpec spec;
    spec.which = parse_case(p.str("case", "1"));
    spec.params = {p.num("a", 0.0), p.num("b", 1.0), p.num("c", 0.0), p.num("c1", 0.0),
                   p.num("c2", 0.0)};
    spec.z0 = p.num("z0", 0.0);
    spec.z1 = p.num("z1", 0.0);
    spec.z2 = p.num("z2", 0.0);
    spec.lambda1 = p.num("lambda1", 0.0);
    spec.lambda2 = p.num("lambda2", 0.0);
    spec.domain = p.domain(kDefaultParabolicDomain);
    take(s, parabolic_minimal_family(spec));
    read_declared(p, s.lambdas, false);
  } else if (fam == "lambda3") {
    const double a = p.num("a", 0.0);
    const double b = p.num("b", 1.0);
    const double lambda = p.num("lambda", 1.0);
    const double phi0 = p.num("phi0", 0.0);
    const double z0 = p.num("z0", 0.0);
    take(s, lambda3_family(a, b, lambda, phi0, z0, p.domain(kDefaultParabolicDomain)));
    s.lambda3_base = lambda;
  } else if (fam == "linear-profile") {
    const double a = p.num("a", 0.0);
    const double b = p.num("b", 1.0);
    const double c = p.num("c", 0.0);
    const double z0 = p.num("z0", 0.0);
    const double z1 = p.num("z1", 1.0);
    const double l3 = p.num("lambda3", 0.0);
    take(s, linear_profile_family(a, b, c, z0, z1, l3, p.domain(kDefaultParabolicDomain)));
  } else if (fam == "helicoidal") {
    const double c = p.num("c", 0.0);
    ProfileCurve z = read_profile(p);
    s.helicoidal = HelicoidalSurface(c, std::move(z), p.domain(kDefaultHelicoidalDomain));
    read_declared(p, s.lambdas, true);
  } else if (fam == "parabolic") {
    const ParabolicParams q{p.num("a", 0.0), p.num("b", 1.0), p.num("c", 0.0), p.num("c1", 0.0),
                            p.num("c2", 0.0)};
    ProfileCurve z = read_profile(p);
    s.parabolic = ParabolicRevolutionSurface(q, std::move(z), p.domain(kDefaultParabolicDomain));
    read_declared(p, s.lambdas, true);
  } else if (fam == "graph") {
    Polynomial2 poly;
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; i + j <= 4; ++j) {
        poly.c[i][j] = p.num("c" + std::to_string(i) + std::to_string(j), 0.0);
      }
    }
    s.graph = polynomial_graph(poly, p.domain({-1.0, 1.0, -1.0, 1.0}));
  } else if (fam.empty()) {
    bad_input("no family given");
  } else {
    bad_input("unknown family '" + fam + "'");
  }
  p.finish();
  s.params = p.resolved();
  return s;
}

const Domain& subject_domain(const Subject& s) {
  if (s.helicoidal) return s.helicoidal->domain();
  if (s.parabolic) return s.parabolic->domain();
  return s.graph->domain();
}

ParametricSurface subject_parametric(const Subject& s) {
  if (s.helicoidal) return s.helicoidal->parametric();
  if (s.parabolic) return s.parabolic->parametric();
  return s.graph->parametric();
}

Route parse_route(const std::string& mode) {
  if (mode == "closed_form") return Route::ClosedForm;
  if (mode == "generic_exact") return Route::GenericExact;
  if (mode == "finite_difference") return Route::GenericFiniteDifference;
  bad_input("unknown mode '" + mode + "' (expected closed_form, generic_exact, finite_difference)");
}

GaussMapKind parse_kind(const std::string& s) {
  if (s == "minimal") return GaussMapKind::Minimal;
  if (s == "parabolic") return GaussMapKind::Parabolic;
  bad_input("unknown gauss_map '" + s + "' (expected minimal, parabolic)");
}

void require_grid(const RunConfig& c) {
  if (c.nu < 2 || c.nt < 2) bad_input("grid needs at least 2 x 2 points");
}

std::string stem(const RunConfig& c) { return c.out.empty() ? "isogeo_" + c.command : c.out; }

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  return f;
}

void finish_output(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

void write_json(const ojson& j, const std::string& path) {
  std::ofstream f = open_output(path);
  f << j.dump(2) << '\n';
  finish_output(f, path);
}

ojson grid_json(const Grid& g) {
  return {{"nu", g.nu},
          {"nt", g.nt},
          {"u_min", g.box.u_min},
          {"u_max", g.box.u_max},
          {"t_min", g.box.t_min},
          {"t_max", g.box.t_max}};
}

ojson subject_header(const RunConfig& config, const Subject& s) {
  ojson j;
  j["command"] = config.command;
  j["family"] = s.family;
  if (!s.case_label.empty()) j["case"] = s.case_label;
  j["params"] = s.params;
  return j;
}

ojson coordinate_json(int index, const CoordinateReport& c) {
  return {{"index", index},
          {"declared_lambda", optional_number(c.declared_lambda)},
          {"fitted_lambda", optional_number(c.fitted_lambda)},
          {"constancy_deviation", c.constancy_deviation},
          {"sup_residual", c.sup_residual},
          {"sup_value", c.sup_value},
          {"trivial", c.trivial},
          {"verdict", std::string(to_string(c.verdict))},
          {"passed", c.passed}};
}

ojson thresholds_json() {
  return {{"triviality", kTrivialityThreshold},
          {"fit_inclusion_fraction", kFitInclusionFraction},
          {"eigenfunction_deviation", kEigenfunctionDeviation},
          {"not_eigenfunction_deviation", kNotEigenfunctionDeviation}};
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Pass: return kExitPass;
    case Outcome::Fail: return kExitFail;
    case Outcome::Inconclusive: return kExitInconclusive;
  }
  return kExitFail;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError: return kExitIoError;
    case ErrorCode::InternalInconsistency: return kExitFail;
    default: return kExitInvalidInput;
  }
}

template <class Body>
int guarded(std::ostream& log, Body body) {
  try {
    return body();
  } catch (const Error& e) {
    log << "isogeo: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    log << "isogeo: invalid configuration: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

int verify_graph(const RunConfig& config, const Subject& s, std::ostream& log) {
  const double tol = config.tol.value_or(1e-8);
  const Grid grid{s.graph->domain(), config.nu, config.nt};
  ojson j = subject_header(config, s);
  j["grid"] = grid_json(grid);
  j["tolerance"] = tol;
  int code = kExitPass;
  try {
    const HarmonicClassification r = classify_harmonic(*s.graph, grid, tol);
    j["classification"] = std::string(to_string(r.result));
    j["sup_lap_minimal_normal"] = r.sup_lap_minimal_normal;
    j["H_spread"] = r.H_spread;
    j["sup_abs_H"] = r.sup_abs_H;
    j["sup_lap_gauss_map"] = r.sup_lap_gauss_map;
    j["sup_hessian"] = r.sup_hessian;
    j["outcome"] = "pass";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InternalInconsistency) throw;
    log << "isogeo: " << e.what() << '\n';
    j["classification"] = nullptr;
    j["diagnostic"] = e.what();
    j["outcome"] = "fail";
    code = kExitFail;
  }
  j["exit_code"] = code;
  write_json(j, stem(config) + ".json");
  return code;
}

}  // namespace

// --- configuration -----------------------------------------------------------------

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad_input("config must be a JSON object");
  static const std::set<std::string> known = {"command", "family", "params", "grid", "tol",
                                              "out",     "gauss_map", "mode"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) bad_input("unknown config key '" + item.key() + "'");
  }
  RunConfig c;
  if (j.contains("command")) c.command = j.at("command").get<std::string>();
  if (j.contains("family")) c.family = j.at("family").get<std::string>();
  if (j.contains("params")) {
    if (!j.at("params").is_object()) bad_input("params must be a JSON object");
    c.params = ojson::object();
    for (const auto& item : j.at("params").items()) c.params[item.key()] = item.value();
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    if (!g.is_array() || g.size() != 2) bad_input("grid must be [nu, nt]");
    c.nu = g.at(0).get<int>();
    c.nt = g.at(1).get<int>();
  }
  if (j.contains("tol") && !j.at("tol").is_null()) c.tol = j.at("tol").get<double>();
  if (j.contains("out")) c.out = j.at("out").get<std::string>();
  if (j.contains("gauss_map")) c.gauss_map = j.at("gauss_map").get<std::string>();
  if (j.contains("mode")) c.mode = j.at("mode").get<std::string>();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot read config '" + path + "'");
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    bad_input("config '" + path + "' is not valid JSON: " + e.what());
  }
  try {
    return config_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    bad_input("config '" + path + "': " + e.what());
  }
}

ojson config_to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"family", c.family},
          {"params", c.params},
          {"grid", {c.nu, c.nt}},
          {"tol", optional_number(c.tol)},
          {"out", c.out},
          {"gauss_map", c.gauss_map},
          {"mode", c.mode}};
}

// --- commands ----------------------------------------------------------------------

int cmd_verify(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    require_grid(config);
    const Subject s = build_subject(config);
    if (s.graph) return verify_graph(config, s, log);

    EigenOptions opt;
    opt.route = parse_route(config.mode);
    opt.nu = config.nu;
    opt.nt = config.nt;
    opt.tolerance = config.tol;
    const GaussMapKind kind = parse_kind(config.gauss_map);
    const EigenResidualReport rep = s.helicoidal
                                        ? eigen_residual(*s.helicoidal, kind, s.lambdas, opt)
                                        : eigen_residual(*s.parabolic, kind, s.lambdas, opt);

    ojson j = subject_header(config, s);
    j["gauss_map"] = std::string(to_string(rep.kind));
    j["route"] = std::string(to_string(rep.route));
    j["grid"] = grid_json(rep.grid);
    j["tolerance"] = rep.tolerance;
    j["thresholds"] = thresholds_json();
    ojson coords = ojson::array();
    for (int i = 0; i < 3; ++i) coords.push_back(coordinate_json(i + 1, rep.coords[i]));
    j["coordinates"] = coords;
    if (s.lambda3_base && rep.kind == GaussMapKind::Parabolic) {
      const auto& fitted = rep.coords[2].fitted_lambda;
      j["lambda3_over_lambda"] = fitted ? ojson(*fitted / *s.lambda3_base) : ojson(nullptr);
    }
    const int code = exit_for(rep.outcome);
    j["outcome"] = std::string(to_string(rep.outcome));
    j["exit_code"] = code;
    write_json(j, stem(config) + ".json");
    return code;
  });
}

int cmd_generate(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    require_grid(config);
    const Subject s = build_subject(config);
    const Grid grid{subject_domain(s), config.nu, config.nt};
    const ParametricSurface surface = subject_parametric(s);

    const int n = grid.nu * grid.nt;
    std::vector<IsoPoint> vertices(static_cast<std::size_t>(n));
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    double k_min = std::numeric_limits<double>::infinity();
    double k_max = -k_min;
    double h_min = k_min;
    double h_max = -k_min;
    int valid = 0;
    for (int i = 0; i < grid.nu; ++i) {
      for (int jj = 0; jj < grid.nt; ++jj) {
        const auto id = static_cast<std::size_t>(i * grid.nt + jj);
        const ParamPoint p = grid.at(i, jj);
        try {
          const IsoPoint x = surface.position(p);
          if (!is_admissible_at(surface, p)) continue;
          const ShapeData sh = shape_and_curvatures(surface, p);
          vertices[id] = x;
          index[id] = ++valid;
          k_min = std::min(k_min, sh.K);
          k_max = std::max(k_max, sh.K);
          h_min = std::min(h_min, sh.H);
          h_max = std::max(h_max, sh.H);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NearSingular && e.code() != ErrorCode::NonAdmissible &&
              e.code() != ErrorCode::DomainError) {
            throw;
          }
        }
      }
    }

    std::vector<std::array<int, 3>> faces;
    int clipped = 0;
    for (int i = 0; i + 1 < grid.nu; ++i) {
      for (int jj = 0; jj + 1 < grid.nt; ++jj) {
        const int v00 = index[static_cast<std::size_t>(i * grid.nt + jj)];
        const int v01 = index[static_cast<std::size_t>(i * grid.nt + jj + 1)];
        const int v10 = index[static_cast<std::size_t>((i + 1) * grid.nt + jj)];
        const int v11 = index[static_cast<std::size_t>((i + 1) * grid.nt + jj + 1)];
        if (v00 < 0 || v01 < 0 || v10 < 0 || v11 < 0) {
          ++clipped;
          continue;
        }
        faces.push_back({v00, v10, v11});
        faces.push_back({v00, v11, v01});
      }
    }

    const std::string obj_path = stem(config) + ".obj";
    {
      std::ofstream f = open_output(obj_path);
      for (std::size_t id = 0; id < vertices.size(); ++id) {
        if (index[id] < 0) continue;
        const IsoPoint& v = vertices[id];
        f << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' ' << format_double(v.z)
          << '\n';
      }
      for (const auto& t : faces) f << "f " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
      finish_output(f, obj_path);
    }

    ojson j = subject_header(config, s);
    j["grid"] = grid_json(grid);
    j["mesh"] = obj_path;
    j["vertices"] = valid;
    j["faces"] = faces.size();
    j["clipped_vertices"] = n - valid;
    j["clipped_cells"] = clipped;
    j["K_range"] = valid > 0 ? ojson{k_min, k_max} : ojson(nullptr);
    j["H_range"] = valid > 0 ? ojson{h_min, h_max} : ojson(nullptr);
    if (s.helicoidal) j["rotational"] = s.helicoidal->is_rotational();
    if (s.parabolic) {
      j["subfamily"] = std::string(to_string(s.parabolic->subfamily()));
      const auto q = s.parabolic->quadric_type();
      j["quadric_type"] = q ? ojson(std::string(to_string(*q))) : ojson(nullptr);
    }
    if (s.cylinder) {
      j["cylinder"] = {{"change", s.cylinder->change},
                       {"ruling", {s.cylinder->ruling.x1, s.cylinder->ruling.x2,
                                   s.cylinder->ruling.x3}}};
    }
    write_json(j, stem(config) + ".json");
    if (clipped > 0) log << "isogeo: clipped " << clipped << " singular cells\n";
    return static_cast<int>(kExitPass);
  });
}

int cmd_spectrum(const RunConfig& config, std::ostream& log) {
  return guarded(log, [&] {
    Params p(config.params);
    SpectrumSpec spec;
    const std::string kind = p.str("kind", "homogeneous");
    if (kind == "homogeneous") spec.kind = SpectrumKind::Homogeneous;
    else if (kind == "periodic") spec.kind = SpectrumKind::Periodic;
    else if (kind == "mixed_bessel") spec.kind = SpectrumKind::MixedBessel;
    else bad_input("unknown spectrum kind '" + kind + "'");
    spec.L = p.num("L", 1.0);
    spec.a_offset = p.num("a_offset", 0.0);
    spec.n_max = p.integer("n_max", 3);
    if (spec.kind != SpectrumKind::MixedBessel) {
      spec.a = p.num("a", 0.0);
      spec.b = p.num("b", 1.0);
    }
    if (spec.kind != SpectrumKind::Homogeneous) spec.z1 = p.num("z1", 1.0);
    if (spec.kind == SpectrumKind::Periodic) spec.z2 = p.num("z2", 1.0);
    p.finish();
    const Spectrum sp = boundary_spectrum(spec);

    EigenOptions opt;
    opt.route = parse_route(config.mode);
    opt.nu = config.nu;
    opt.nt = config.nt;
    opt.tolerance = config.tol;
    constexpr double kBoundaryTolerance = 1e-9;

    ojson j;
    j["command"] = config.command;
    j["kind"] = kind;
    j["params"] = p.resolved();
    j["boundary_tolerance"] = kBoundaryTolerance;
    ojson modes = ojson::array();
    bool all_pass = true;
    bool inconclusive = false;
    const std::string csv_path = stem(config) + ".csv";
    std::ofstream csv = open_output(csv_path);
    csv << "n,eigenvalue,boundary_residual\r\n";
    for (const SpectrumMode& m : sp.modes) {
      const EigenResidualReport rep = verify_spectrum_mode(sp, m, opt);
      double sup_res = 0.0;
      for (const auto& c : rep.coords) {
        if (c.declared_lambda && !c.trivial) sup_res = std::max(sup_res, c.sup_residual);
      }
      const bool ok = m.boundary_residual <= kBoundaryTolerance && rep.outcome == Outcome::Pass;
      all_pass = all_pass && ok;
      inconclusive = inconclusive || rep.outcome == Outcome::Inconclusive;
      const ProfileSpec& ps = m.profile.spec();
      ojson row = {{"n", m.n},
                   {"eigenvalue", m.lambda},
                   {"Lambda", m.big_lambda},
                   {"boundary_residual", m.boundary_residual},
                   {"profile",
                    {{"family", std::string(to_string(ps.family))},
                     {"z0", ps.z0},
                     {"z1", ps.z1},
                     {"z2", ps.z2},
                     {"lambda", ps.lambda}}},
                   {"eigen_sup_residual", sup_res},
                   {"eigen_tolerance", rep.tolerance},
                   {"outcome", std::string(to_string(rep.outcome))}};
      if (spec.kind == SpectrumKind::Periodic) {
        ojson checks = ojson::array();
        for (int k = 1; k <= 3; ++k) {
          checks.push_back(std::abs(m.profile(spec.a_offset) - m.profile(spec.a_offset + k * spec.L)));
        }
        row["period_checks"] = checks;
      }
      modes.push_back(row);
      csv << m.n << ',' << format_double(m.lambda) << ',' << format_double(m.boundary_residual)
          << "\r\n";
    }
    finish_output(csv, csv_path);
    j["modes"] = modes;
    const int code = all_pass ? kExitPass : (inconclusive ? kExitInconclusive : kExitFail);
    j["outcome"] = code == kExitPass ? "pass" : (code == kExitFail ? "fail" : "inconclusive");
    j["exit_code"] = code;
    write_json(j, stem(config) + ".json");
    return code;
  });
}

// --- entry point ------------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surface geometry and Gauss-map eigenvalue verification in simply isotropic space",
               "isogeo"};
  std::string command;
  std::string config_path;
  std::string family;
  std::vector<std::string> params;
  std::vector<int> grid;
  std::optional<double> tol;
  std::string out_path;
  std::string gauss_map;
  std::string mode;
  app.add_option("command", command, "generate | verify | spectrum")
      ->required()
      ->check(CLI::IsMember({"generate", "verify", "spectrum"}));
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--family", family, "surface family");
  app.add_option("--param", params, "family parameter k=v (repeatable)");
  app.add_option("--grid", grid, "grid resolution NU NT")->expected(2);
  app.add_option("--tol", tol, "residual tolerance");
  app.add_option("--out", out_path, "output path stem");
  app.add_option("--gauss-map", gauss_map, "minimal | parabolic");
  app.add_option("--mode", mode, "closed_form | generic_exact | finite_difference");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalidInput;
  }

  RunConfig config;
  const int loaded = guarded(err, [&] {
    if (!config_path.empty()) config = load_config(config_path);
    config.command = command;
    if (!family.empty()) config.family = family;
    for (const std::string& kv : params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) bad_input("--param expects k=v, got '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      double number = 0.0;
      const auto res = std::from_chars(value.data(), value.data() + value.size(), number);
      if (res.ec == std::errc() && res.ptr == value.data() + value.size()) {
        config.params[key] = number;
      } else {
        config.params[key] = value;
      }
    }
    if (!grid.empty()) {
      config.nu = grid[0];
      config.nt = grid[1];
    }
    if (tol) config.tol = tol;
    if (!out_path.empty()) config.out = out_path;
    if (!gauss_map.empty()) config.gauss_map = gauss_map;
    if (!mode.empty()) config.mode = mode;
    return static_cast<int>(kExitPass);
  });
  if (loaded != kExitPass) return loaded;

  if (command == "generate") return cmd_generate(config, err);
  if (command == "verify") return cmd_verify(config, err);
  return cmd_spectrum(config, err);
}

}  // namespace isogeo::cli
