#include "isogeo/profile.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "isogeo/bessel.hpp"
#include "isogeo/errors.hpp"

namespace isogeo {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidFamilyParams, what);
}

ProfileValues numeric_values(const std::function<double(double)>& f, double u) {
  constexpr double h = 1e-3;
  double s[7];
  for (int k = -3; k <= 3; ++k) s[k + 3] = f(u + k * h);
  ProfileValues v;
  v.z = s[3];
  v.dz = (s[1] - 8.0 * s[2] + 8.0 * s[4] - s[5]) / (12.0 * h);
  v.d2z = (-s[1] + 16.0 * s[2] - 30.0 * s[3] + 16.0 * s[4] - s[5]) / (12.0 * h * h);
  v.d3z = (s[0] - 8.0 * s[1] + 13.0 * s[2] - 13.0 * s[4] + 8.0 * s[5] - s[6]) / (8.0 * h * h * h);
  return v;
}

ProfileValues bessel_values(const ProfileSpec& p, double u) {
  const bool oscillatory = p.lambda > 0.0;
  const double k = std::sqrt(std::abs(p.lambda));
  const double x = k * u;
  ProfileValues v{p.z0, 0.0, 0.0, 0.0};
  // Members with a zero coefficient are not evaluated.
  auto add = [&](bessel::Family fam, double coeff) {
    if (coeff == 0.0) return;
    v.z += coeff * bessel::eval({fam, bessel::Order::Zero}, x);
    v.dz += coeff * k * bessel::deriv(fam, x);
    v.d2z += coeff * k * k * bessel::deriv2(fam, x);
    v.d3z += coeff * k * k * k * bessel::deriv3(fam, x);
  };
  add(oscillatory ? bessel::Family::J : bessel::Family::I, p.z1);
  add(oscillatory ? bessel::Family::Y : bessel::Family::K, p.z2);
  return v;
}

}  // namespace

std::string_view to_string(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::QuadraticLog: return "quadratic_log";
    case ProfileFamily::Quadratic: return "quadratic";
    case ProfileFamily::BesselCombo: return "bessel";
    case ProfileFamily::TrigCombo: return "trig";
    case ProfileFamily::HyperCombo: return "hyper";
    case ProfileFamily::Numeric: return "numeric";
  }
  return "unknown";
}

bool ProfileCurve::requires_positive_u() const {
  return spec_.family == ProfileFamily::QuadraticLog || spec_.family == ProfileFamily::BesselCombo;
}

ProfileValues ProfileCurve::eval(double u) const {
  if (requires_positive_u() && !(u > 0.0)) {
    throw Error(ErrorCode::DomainError,
                std::string(to_string(spec_.family)) + " profile requires u > 0, got " +
                    std::to_string(u));
  }
  const ProfileSpec& p = spec_;
  ProfileValues v;
  switch (p.family) {
    case ProfileFamily::QuadraticLog:
      v.z = p.z0 + p.z1 * u * u + p.z2 * std::log(u);
      v.dz = 2.0 * p.z1 * u + p.z2 / u;
      v.d2z = 2.0 * p.z1 - p.z2 / (u * u);
      v.d3z = 2.0 * p.z2 / (u * u * u);
      break;
    case ProfileFamily::Quadratic:
      v.z = p.z0 + p.z1 * u + p.z2 * u * u;
      v.dz = p.z1 + 2.0 * p.z2 * u;
      v.d2z = 2.0 * p.z2;
      v.d3z = 0.0;
      break;
    case ProfileFamily::BesselCombo:
      v = bessel_values(p, u);
      break;
    case ProfileFamily::TrigCombo: {
      const double k = std::sqrt(p.lambda);
      const double c = std::cos(k * u);
      const double s = std::sin(k * u);
      const double a = p.z1 * c + p.z2 * s;
      const double b = -p.z1 * s + p.z2 * c;
      v = {p.z0 + a, k * b, -k * k * a, -k * k * k * b};
      break;
    }
    case ProfileFamily::HyperCombo: {
      const double k = std::sqrt(-p.lambda);
      const double c = std::cosh(k * u);
      const double s = std::sinh(k * u);
      const double a = p.z1 * c + p.z2 * s;
      const double b = p.z1 * s + p.z2 * c;
      v = {p.z0 + a, k * b, k * k * a, k * k * k * b};
      break;
    }
    case ProfileFamily::Numeric:
      v = numeric_values(p.numeric, u);
      break;
  }
  if (cubic_ != 0.0) {
    v.z += cubic_ * u * u * u;
    v.dz += 3.0 * cubic_ * u * u;
    v.d2z += 6.0 * cubic_ * u;
    v.d3z += 6.0 * cubic_;
  }
  return v;
}

ProfileCurve ProfileCurve::with_cubic(double k) const {
  ProfileCurve copy = *this;
  copy.cubic_ += k;
  return copy;
}

ProfileCurve make_profile(const ProfileSpec& spec) {
  require(std::isfinite(spec.z0) && std::isfinite(spec.z1) && std::isfinite(spec.z2) &&
              std::isfinite(spec.lambda),
          "profile coefficients must be finite");
  switch (spec.family) {
    case ProfileFamily::BesselCombo:
      require(spec.lambda != 0.0, "Bessel profile requires lambda != 0");
      break;
    case ProfileFamily::TrigCombo:
      require(spec.lambda > 0.0, "trigonometric profile requires Lambda > 0");
      break;
    case ProfileFamily::HyperCombo:
      require(spec.lambda < 0.0, "hyperbolic profile requires Lambda < 0");
      break;
    case ProfileFamily::Numeric:
      require(static_cast<bool>(spec.numeric), "numeric profile requires a callable");
      break;
    default:
      break;
  }
  return ProfileCurve(spec);
}

ProfileCurve quadratic_log_profile(double z0, double z1, double z2) {
  return make_profile({ProfileFamily::QuadraticLog, z0, z1, z2, 0.0, {}});
}
ProfileCurve quadratic_profile(double z0, double z1, double z2) {
  return make_profile({ProfileFamily::Quadratic, z0, z1, z2, 0.0, {}});
}
ProfileCurve bessel_profile(double z0, double z1, double z2, double lambda) {
  return make_profile({ProfileFamily::BesselCombo, z0, z1, z2, lambda, {}});
}
ProfileCurve trig_profile(double z0, double z1, double z2, double big_lambda) {
  return make_profile({ProfileFamily::TrigCombo, z0, z1, z2, big_lambda, {}});
}
ProfileCurve hyper_profile(double z0, double z1, double z2, double big_lambda) {
  return make_profile({ProfileFamily::HyperCombo, z0, z1, z2, big_lambda, {}});
}
ProfileCurve numeric_profile(std::function<double(double)> z) {
  return make_profile({ProfileFamily::Numeric, 0.0, 0.0, 0.0, 0.0, std::move(z)});
}

}  // namespace isogeo
