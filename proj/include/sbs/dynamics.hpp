#pragma once

// Linear quadrature dynamics generated by
//   H = w_s a_s^dag a_s + w_k a_k^dag a_k
//       + lambda (e^{-i w_L t} a_s^dag a_k^dag + e^{i w_L t} a_k a_s).
//
// Two independent routes to sigma(t):
//   * propagate():          closed-form Bogoliubov map, resonance only;
//   * integrate_moments():  RK4 on the Lyapunov equation, any detuning.

#include <cstddef>
#include <span>
#include <vector>

#include "sbs/gaussian_core.hpp"

namespace sbs {

/// Generator A(t) of x' = A(t) x; Omega^{-1} A(t) is symmetric.
Mat4 drift_matrix(double t, const ModelParams& params);

/// Two-mode squeeze with parameter r in the interaction frame.
Mat4 two_mode_squeeze(double r);

/// S(t) = (R(w_s t) (+) R(w_k t)) * squeeze(lambda t). Requires exact resonance
/// (ErrorKind::UnsupportedRegime otherwise) and t >= 0.
Mat4 bogoliubov_propagator(double t, const ModelParams& params);

/// S(t) sigma0 S(t)^T via the closed-form propagator.
Covariance propagate(const Covariance& sigma0, double t, const ModelParams& params);

/// 1e-3 * min(1/lambda, 1/|w_L|), ignoring whichever rate is zero.
double default_time_step(const ModelParams& params);

/// Classic RK4 on sigma' = A sigma + sigma A^T from time 0 to t. The step is
/// shrunk to t / ceil(t / dt) so the grid lands on t. The state is
/// re-symmetrized after every step.
Covariance integrate_moments(const Covariance& sigma0, double t, const ModelParams& params,
                             double dt);

/// Same integrator started at time t0 instead of 0 (the drift is explicitly
/// time dependent off the interaction frame).
Covariance integrate_moments(const Covariance& sigma0, double t0, double t1,
                             const ModelParams& params, double dt);

/// RK4 on S' = A S, S(0) = I. Oracle for bogoliubov_propagator().
Mat4 integrate_propagator(double t, const ModelParams& params, double dt);

/// RK4 covariances at each of `times` (ascending, >= 0), integrating
/// continuously from t = 0 through the grid.
std::vector<Covariance> integrate_trajectory(const Covariance& sigma0,
                                             std::span<const double> times,
                                             const ModelParams& params, double dt);

/// sigma -> R sigma R^T with R = R(angle_s) (+) R(angle_k).
Covariance to_local_rotation_frame(const Covariance& sigma, double angle_s, double angle_k);

/// Removes the free rotation of both modes accumulated up to time t.
Covariance to_interaction_frame(const Covariance& sigma, double t, const ModelParams& params);

/// Closed form at resonance, RK4 with the default step otherwise.
Covariance evolve(const Covariance& sigma0, double t, const ModelParams& params);

}  // namespace sbs
