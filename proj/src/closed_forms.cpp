#include "sbs/closed_forms.hpp"

#include <cmath>

#include "sbs/error.hpp"

namespace sbs::closed_form {

namespace {

constexpr int qs = 0, ps = 1, qk = 2, pk = 3;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidParameter, std::string(name) + " must be positive");
  }
}

double coth(double x) { return 1.0 / std::tanh(x); }

void set_sym(Mat4& m, int i, int j, double v) {
  m(i, j) = v;
  m(j, i) = v;
}

}  // namespace

CaseLabel case_for(const InitialState& state) {
  if (const auto* th = std::get_if<ThermalPhonon>(&state)) return ThermalCase{th->theta};
  if (const auto* sq = std::get_if<SqueezedPhonon>(&state)) return SqueezedCase{sq->eta};
  return VacuumCase{};
}

std::string_view case_name(const CaseLabel& c) {
  switch (c.index()) {
    case 1: return "case2";
    case 2: return "case3";
    default: return "case1";
  }
}

Covariance vacuum_start_covariance(double t, const ModelParams& params) {
  const double x = 2.0 * params.coupling * t;
  const double phi = params.omega_l * t;
  const double diag = 0.5 * std::cosh(x);
  const double sin_term = 0.5 * std::sinh(x) * std::sin(phi);
  const double cos_term = -0.5 * std::sinh(x) * std::cos(phi);

  Mat4 m = Mat4::Zero();
  m.diagonal().setConstant(diag);
  set_sym(m, ps, qk, cos_term);
  set_sym(m, qs, pk, cos_term);
  set_sym(m, ps, pk, sin_term);
  set_sym(m, qs, qk, -sin_term);
  return Covariance(m);
}

Covariance thermal_start_covariance(double t, const ModelParams& params, double theta) {
  require_positive(theta, "theta");
  const double lt = params.coupling * t;
  const double phi = params.omega_l * t;
  const double g = 1.0 + coth(theta);
  const double sh = std::sinh(lt);
  const double diag = 0.5 * sh * sh * g + 0.5;
  const double sin_term = 0.25 * std::sinh(2.0 * lt) * std::sin(phi) * g;
  const double cos_term = -0.25 * std::sinh(2.0 * lt) * std::cos(phi) * g;

  Mat4 m = Mat4::Zero();
  m.diagonal().setConstant(diag);
  set_sym(m, ps, pk, sin_term);
  set_sym(m, qs, qk, -sin_term);
  set_sym(m, ps, qk, cos_term);
  set_sym(m, qs, pk, cos_term);
  return Covariance(m);
}

Covariance squeezed_start_covariance(double t, const ModelParams& params, double eta) {
  require_positive(eta, "eta");
  const double e = eta;
  const double e2 = eta * eta;
  const double lt = params.coupling * t;
  const double ch = std::cosh(lt);
  const double sh = std::sinh(lt);
  const double ch2 = ch * ch;
  const double sh2 = sh * sh;
  const double s2l = std::sinh(2.0 * lt);
  const double phi = params.omega_l * t;
  const double ss = std::sin(params.omega_s * t);
  const double cs = std::cos(params.omega_s * t);
  const double sk = std::sin(params.omega_k * t);
  const double ck = std::cos(params.omega_k * t);

  Mat4 m;
  m(ps, ps) = (e * ch2 + sh2 * (e2 * ss * ss + cs * cs)) / (2.0 * e);
  m(pk, pk) = (e * sh2 + ch2 * (e2 * ck * ck + sk * sk)) / (2.0 * e);
  m(qs, qs) = (e * ch2 + sh2 * (e2 * cs * cs + ss * ss)) / (2.0 * e);
  m(qk, qk) = (e * sh2 + ch2 * (e2 * sk * sk + ck * ck)) / (2.0 * e);

  set_sym(m, ps, pk, s2l / (4.0 * e) * (e * std::sin(phi) + e2 * ss * ck + cs * sk));
  set_sym(m, ps, qs, sh2 * std::sin(2.0 * params.omega_s * t) * (1.0 - e2) / (4.0 * e));
  set_sym(m, ps, qk, -s2l / (4.0 * e) * (e * std::cos(phi) - e2 * ss * sk + cs * ck));
  set_sym(m, pk, qs, -s2l / (4.0 * e) * (e * std::cos(phi) - ss * sk + e2 * cs * ck));
  set_sym(m, pk, qk, -ch2 * std::sin(2.0 * params.omega_k * t) * (1.0 - e2) / (4.0 * e));
  set_sym(m, qs, qk, -s2l / (4.0 * e) * (e * std::sin(phi) + ss * ck + e2 * cs * sk));
  return Covariance(m);
}

Covariance covariance(const CaseLabel& c, double t, const ModelParams& params) {
  if (const auto* th = std::get_if<ThermalCase>(&c)) {
    return thermal_start_covariance(t, params, th->theta);
  }
  if (const auto* sq = std::get_if<SqueezedCase>(&c)) {
    return squeezed_start_covariance(t, params, sq->eta);
  }
  return vacuum_start_covariance(t, params);
}

double correlation_measure(const CaseLabel& c, double t, double coupling) {
  const double s = std::sinh(2.0 * coupling * t);
  const double s2 = s * s;
  if (const auto* th = std::get_if<ThermalCase>(&c)) {
    require_positive(th->theta, "theta");
    const double g = 1.0 + coth(th->theta);
    return s2 * g * g / 8.0;
  }
  if (const auto* sq = std::get_if<SqueezedCase>(&c)) {
    require_positive(sq->eta, "eta");
    const double g = 1.0 + 1.0 / sq->eta;
    return s2 * (g * g * (sq->eta * sq->eta + 1.0)) / 16.0;
  }
  return 0.5 * s2;
}

double tau(double theta) {
  require_positive(theta, "theta");
  return 2.0 / (coth(2.0 * theta) + 1.0);
}

double gaussian_distance_measure(const CaseLabel& c, double t, double coupling,
                                 double omega_l) {
  if (std::holds_alternative<SqueezedCase>(c)) {
    throw Error(ErrorKind::NoClosedForm,
                "no closed-form Gaussian distance measure exists for the squeezed-phonon case");
  }
  const double cphi = std::cos(omega_l * t);
  const double s = std::sinh(2.0 * coupling * t);
  const double x = cphi * cphi * s * s;
  const double tv = std::holds_alternative<ThermalCase>(c)
                        ? tau(std::get<ThermalCase>(c).theta)
                        : 1.0;
  return x * (3.0 * x + 2.0 * tv) / ((tv + x) * (4.0 * tv + 3.0 * x));
}

}  // namespace sbs::closed_form
