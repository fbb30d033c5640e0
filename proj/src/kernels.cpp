#include "sbs/kernels.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "sbs/dynamics.hpp"
#include "sbs/entanglement.hpp"
#include "sbs/error.hpp"

namespace sbs {

namespace {

// Runs body(i) for i in [0, n) across threads and rethrows the exception of
// the lowest failing index, so error reporting matches the serial order.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void require_resonant(const ModelParams& params) {
  if (!params.resonant()) {
    throw Error(ErrorKind::UnsupportedRegime,
                "closed-form trajectory needs resonant parameters");
  }
}

}  // namespace

StateRow measure_row(double t, const Covariance& sigma) {
  return StateRow{t, sigma, measure_F(sigma), measure_eG(sigma), log_negativity(sigma)};
}

std::vector<double> uniform_times(double t_max, std::size_t steps) {
  if (steps == 0) throw Error(ErrorKind::InvalidParameter, "steps must be >= 1");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorKind::InvalidParameter, "t_max must be finite and >= 0");
  }
  if (steps == 1) return {t_max};
  std::vector<double> times(steps);
  const double n = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) times[i] = t_max * (static_cast<double>(i) / n);
  return times;
}

std::vector<StateRow> trajectory_serial(const Covariance& sigma0, std::span<const double> times,
                                        const ModelParams& params) {
  require_resonant(params);
  std::vector<StateRow> rows;
  rows.reserve(times.size());
  for (const double t : times) rows.push_back(measure_row(t, propagate(sigma0, t, params)));
  return rows;
}

std::vector<StateRow> trajectory_parallel(const Covariance& sigma0,
                                          std::span<const double> times,
                                          const ModelParams& params) {
  require_resonant(params);
  std::vector<StateRow> rows(times.size());
  parallel_for(times.size(), [&](std::size_t i) {
    rows[i] = measure_row(times[i], propagate(sigma0, times[i], params));
  });
  return rows;
}

std::vector<StateRow> trajectory(const Covariance& sigma0, std::span<const double> times,
                                 const ModelParams& params, double dt) {
  params.validate();
  if (params.resonant()) return trajectory_parallel(sigma0, times, params);
  const auto states = integrate_trajectory(sigma0, times, params, dt);
  std::vector<StateRow> rows(times.size());
  parallel_for(times.size(), [&](std::size_t i) { rows[i] = measure_row(times[i], states[i]); });
  return rows;
}

SweepAxis parse_sweep_axis(std::string_view text) {
  if (text == "lambda_t") return SweepAxis::LambdaT;
  if (text == "theta") return SweepAxis::Theta;
  if (text == "eta") return SweepAxis::Eta;
  if (text == "detuning") return SweepAxis::Detuning;
  throw Error(ErrorKind::InvalidParameter,
              "sweep axis must be lambda_t, theta, eta or detuning; got '" + std::string(text) +
                  "'");
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::LambdaT: return "lambda_t";
    case SweepAxis::Theta: return "theta";
    case SweepAxis::Eta: return "eta";
    case SweepAxis::Detuning: return "detuning";
  }
  return "?";
}

void validate(const SweepSpec& spec) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidParameter, msg); };
  spec.base.validate();
  validate(spec.state);
  if (spec.count < 2) fail("sweep needs at least 2 points");
  if (!std::isfinite(spec.from) || !std::isfinite(spec.to)) fail("sweep range must be finite");
  if (!(spec.from < spec.to)) fail("sweep range must satisfy from < to");
  switch (spec.axis) {
    case SweepAxis::LambdaT:
      if (spec.from < 0.0) fail("lambda_t range must be >= 0");
      if (!(spec.base.coupling > 0.0)) fail("lambda_t sweep needs a positive coupling");
      break;
    case SweepAxis::Theta:
      if (!(spec.from > 0.0)) fail("theta range must be > 0");
      break;
    case SweepAxis::Eta:
      if (!(spec.from > 0.0)) fail("eta range must be > 0");
      break;
    case SweepAxis::Detuning:
      break;
  }
  if (spec.axis != SweepAxis::LambdaT && (!(spec.t >= 0.0) || !std::isfinite(spec.t))) {
    fail("sweep evolution time must be finite and >= 0");
  }
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> values(spec.count);
  const double n = static_cast<double>(spec.count - 1);
  for (std::size_t i = 0; i < spec.count; ++i) {
    values[i] = spec.from + (spec.to - spec.from) * (static_cast<double>(i) / n);
  }
  values.back() = spec.to;
  return values;
}

SweepRow sweep_point(const SweepSpec& spec, double value) {
  ModelParams params = spec.base;
  InitialState state = spec.state;
  double t = spec.t;
  switch (spec.axis) {
    case SweepAxis::LambdaT: t = value / params.coupling; break;
    case SweepAxis::Theta: state = ThermalPhonon{value}; break;
    case SweepAxis::Eta: state = SqueezedPhonon{value}; break;
    case SweepAxis::Detuning: params = params.with_detuning(value); break;
  }
  const auto sigma = evolve(initial_covariance(state), t, params);
  const auto row = measure_row(t, sigma);
  return SweepRow{value, t, row.F, row.eG, row.log_negativity};
}

std::vector<SweepRow> sweep_serial(const SweepSpec& spec) {
  const auto values = sweep_values(spec);
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (const double v : values) rows.push_back(sweep_point(spec, v));
  return rows;
}

std::vector<SweepRow> sweep_parallel(const SweepSpec& spec) {
  const auto values = sweep_values(spec);
  std::vector<SweepRow> rows(values.size());
  parallel_for(values.size(), [&](std::size_t i) { rows[i] = sweep_point(spec, values[i]); });
  return rows;
}

}  // namespace sbs
