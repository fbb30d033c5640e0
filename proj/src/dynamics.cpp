#include "sbs/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sbs/error.hpp"

namespace sbs {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::InvalidParameter, "evolution time must be finite and >= 0");
  }
}

void require_step(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorKind::InvalidStep, "time step must be positive and finite");
  }
}

std::size_t step_count(double span, double dt) {
  if (span <= 0.0) return 0;
  const double n = std::ceil(span / dt * (1.0 - 1e-12));
  return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

Mat4 lyapunov_rhs(const Mat4& a, const Mat4& s) {
  const Mat4 as = a * s;
  return as + as.transpose();
}

bool all_finite(const Mat4& m) { return m.allFinite(); }

}  // namespace

Mat4 drift_matrix(double t, const ModelParams& params) {
  params.validate();
  const double c = std::cos(params.omega_l * t);
  const double s = std::sin(params.omega_l * t);
  const double l = params.coupling;
  Mat4 a;
  // rows: d/dt of q_s, p_s, q_k, p_k
  a << 0.0, params.omega_s, -l * s, -l * c,
      -params.omega_s, 0.0, -l * c, l * s,
      -l * s, -l * c, 0.0, params.omega_k,
      -l * c, l * s, -params.omega_k, 0.0;
  return a;
}

Mat4 two_mode_squeeze(double r) {
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  Mat4 m;
  // a_s(t) = cosh r a_s - i sinh r a_k^dag (and s <-> k)
  m << ch, 0.0, 0.0, -sh,
      0.0, ch, -sh, 0.0,
      0.0, -sh, ch, 0.0,
      -sh, 0.0, 0.0, ch;
  return m;
}

Mat4 bogoliubov_propagator(double t, const ModelParams& params) {
  params.validate();
  require_time(t);
  if (!params.resonant()) {
    std::ostringstream os;
    os << "closed-form propagator needs omega_l = omega_s + omega_k (detuning "
       << params.detuning() << "); use integrate_moments";
    throw Error(ErrorKind::UnsupportedRegime, os.str());
  }
  const Mat4 free = block_diag(rotation(params.omega_s * t), rotation(params.omega_k * t));
  return free * two_mode_squeeze(params.coupling * t);
}

Covariance propagate(const Covariance& sigma0, double t, const ModelParams& params) {
  const Mat4 s = bogoliubov_propagator(t, params);
  const Mat4 out = s * sigma0.matrix() * s.transpose();
  return Covariance(0.5 * (out + out.transpose()));
}

double default_time_step(const ModelParams& params) {
  double inverse_rate = 0.0;
  if (params.coupling > 0.0) inverse_rate = 1.0 / params.coupling;
  if (params.omega_l != 0.0) {
    const double v = 1.0 / std::abs(params.omega_l);
    inverse_rate = inverse_rate > 0.0 ? std::min(inverse_rate, v) : v;
  }
  return 1e-3 * (inverse_rate > 0.0 ? inverse_rate : 1.0);
}

Covariance integrate_moments(const Covariance& sigma0, double t, const ModelParams& params,
                             double dt) {
  return integrate_moments(sigma0, 0.0, t, params, dt);
}

Covariance integrate_moments(const Covariance& sigma0, double t0, double t1,
                             const ModelParams& params, double dt) {
  params.validate();
  require_step(dt);
  require_time(t0);
  require_time(t1);
  if (t1 < t0) throw Error(ErrorKind::InvalidParameter, "end time precedes start time");

  const std::size_t n = step_count(t1 - t0, dt);
  if (n == 0) return sigma0;
  const double h = (t1 - t0) / static_cast<double>(n);

  Mat4 s = sigma0.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t0 + static_cast<double>(i) * h;
    const Mat4 a0 = drift_matrix(t, params);
    const Mat4 am = drift_matrix(t + 0.5 * h, params);
    const Mat4 a1 = drift_matrix(t + h, params);
    const Mat4 k1 = lyapunov_rhs(a0, s);
    const Mat4 k2 = lyapunov_rhs(am, s + 0.5 * h * k1);
    const Mat4 k3 = lyapunov_rhs(am, s + 0.5 * h * k2);
    const Mat4 k4 = lyapunov_rhs(a1, s + h * k3);
    s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    s = 0.5 * (s + s.transpose()).eval();
    if (!all_finite(s)) {
      std::ostringstream os;
      os << "covariance became non-finite at RK4 step " << i;
      throw OverflowError(i, os.str());
    }
  }
  return Covariance(s);
}

Mat4 integrate_propagator(double t, const ModelParams& params, double dt) {
  params.validate();
  require_step(dt);
  require_time(t);
  const std::size_t n = step_count(t, dt);
  Mat4 s = Mat4::Identity();
  if (n == 0) return s;
  const double h = t / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = static_cast<double>(i) * h;
    const Mat4 a0 = drift_matrix(ti, params);
    const Mat4 am = drift_matrix(ti + 0.5 * h, params);
    const Mat4 a1 = drift_matrix(ti + h, params);
    const Mat4 k1 = a0 * s;
    const Mat4 k2 = am * (s + 0.5 * h * k1);
    const Mat4 k3 = am * (s + 0.5 * h * k2);
    const Mat4 k4 = a1 * (s + h * k3);
    s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!all_finite(s)) {
      std::ostringstream os;
      os << "propagator became non-finite at RK4 step " << i;
      throw OverflowError(i, os.str());
    }
  }
  return s;
}

std::vector<Covariance> integrate_trajectory(const Covariance& sigma0,
                                             std::span<const double> times,
                                             const ModelParams& params, double dt) {
  std::vector<Covariance> out;
  out.reserve(times.size());
  Covariance current = sigma0;
  double t_prev = 0.0;
  for (const double t : times) {
    if (t < t_prev) {
      throw Error(ErrorKind::InvalidParameter, "trajectory times must be ascending");
    }
    current = integrate_moments(current, t_prev, t, params, dt);
    out.push_back(current);
    t_prev = t;
  }
  return out;
}

Covariance to_local_rotation_frame(const Covariance& sigma, double angle_s, double angle_k) {
  const Mat4 r = block_diag(rotation(angle_s), rotation(angle_k));
  const Mat4 out = r * sigma.matrix() * r.transpose();
  return Covariance(out);
}

Covariance to_interaction_frame(const Covariance& sigma, double t, const ModelParams& params) {
  return to_local_rotation_frame(sigma, -params.omega_s * t, -params.omega_k * t);
}

Covariance evolve(const Covariance& sigma0, double t, const ModelParams& params) {
  if (params.resonant()) return propagate(sigma0, t, params);
  return integrate_moments(sigma0, t, params, default_time_step(params));
}

}  // namespace sbs
