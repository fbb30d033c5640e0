#pragma once

// Data-parallel evaluation over independent grid points (time samples or
// sweep parameters). Each `*_parallel` kernel has a `*_serial` twin that runs
// the identical per-point function in order; the two must agree bit for bit.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "sbs/gaussian_core.hpp"

namespace sbs {

struct StateRow {
  double t = 0.0;
  Covariance sigma;
  double F = 0.0;
  double eG = 0.0;
  double log_negativity = 0.0;
};

/// Measures of one covariance sample.
StateRow measure_row(double t, const Covariance& sigma);

/// `steps` uniformly spaced times on [0, t_max]; a single step yields {t_max}.
std::vector<double> uniform_times(double t_max, std::size_t steps);

/// Closed-form propagation and measures at each time; needs resonance.
std::vector<StateRow> trajectory_serial(const Covariance& sigma0, std::span<const double> times,
                                        const ModelParams& params);
std::vector<StateRow> trajectory_parallel(const Covariance& sigma0,
                                          std::span<const double> times,
                                          const ModelParams& params);

/// Any detuning: closed form at resonance, otherwise one continuous RK4 pass
/// with step `dt` followed by parallel measure evaluation.
std::vector<StateRow> trajectory(const Covariance& sigma0, std::span<const double> times,
                                 const ModelParams& params, double dt);

enum class SweepAxis { LambdaT, Theta, Eta, Detuning };

SweepAxis parse_sweep_axis(std::string_view text);
std::string_view to_string(SweepAxis axis);

struct SweepSpec {
  ModelParams base;
  InitialState state = Vacuum{};
  SweepAxis axis = SweepAxis::LambdaT;
  double from = 0.0;
  double to = 1.0;
  std::size_t count = 2;
  /// Evolution time for every axis except lambda_t, where t = value / lambda.
  double t = 0.0;
};

struct SweepRow {
  double value = 0.0;
  double t = 0.0;
  double F = 0.0;
  double eG = 0.0;
  double log_negativity = 0.0;
};

/// Throws ErrorKind::InvalidParameter for an empty, reversed or
/// out-of-domain range.
void validate(const SweepSpec& spec);

std::vector<double> sweep_values(const SweepSpec& spec);

SweepRow sweep_point(const SweepSpec& spec, double value);

/// Rows in ascending axis order.
std::vector<SweepRow> sweep_serial(const SweepSpec& spec);
std::vector<SweepRow> sweep_parallel(const SweepSpec& spec);

}  // namespace sbs
