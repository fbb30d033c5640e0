#include "sbs/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sbs/dynamics.hpp"
#include "sbs/error.hpp"
#include "sbs/io.hpp"

namespace sbs::cli {

namespace {

int exit_code(const Error& e) { return e.kind() == ErrorKind::Io ? kExitIo : kExitInvalid; }

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    body();
    return kExitOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e);
  }
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int cmd_evolve(const RunConfig& config, std::ostream& err) {
  return guarded(err, [&] {
    config.params.validate();
    validate(config.state);
    if (config.dt_oracle && !(*config.dt_oracle > 0.0)) {
      throw Error(ErrorKind::InvalidStep, "--dt must be positive");
    }
    const auto times = uniform_times(config.t_max, config.steps);
    const double dt = config.dt_oracle.value_or(default_time_step(config.params));
    const auto rows = trajectory(initial_covariance(config.state), times, config.params, dt);
    std::ostringstream os;
    if (config.format == Format::Json) {
      os << dump(io::trajectory_to_json(rows));
    } else {
      io::write_trajectory_csv(os, rows);
    }
    io::write_text(config.output_path, os.str());
  });
}

int cmd_sweep(const SweepSpec& spec, Format format, const std::string& output_path,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = sweep_parallel(spec);
    std::ostringstream os;
    if (format == Format::Json) {
      os << dump(io::sweep_to_json(spec.axis, rows));
    } else {
      io::write_sweep_csv(os, spec.axis, rows);
    }
    io::write_text(output_path, os.str());
  });
}

int cmd_verify(const VerifySpec& spec, const std::string& output_path, std::ostream& err) {
  return guarded(err, [&] {
    const auto report = run_verify(spec);
    io::write_text(output_path, dump(to_json(report)));
    for (const auto& r : report.records) {
      err << r.formula << ' ' << to_string(r.frame) << ' ' << to_string(r.verdict) << ' '
          << io::format_number(r.max_abs_dev);
      if (r.worst_entry) err << ' ' << *r.worst_entry;
      err << '\n';
    }
    for (const auto& f : report.findings) {
      err << f.id << ' ' << to_string(f.verdict) << ' ' << io::format_number(f.max_abs_dev)
          << '\n';
    }
  });
}

void parse_range(const std::string& text, double& from, double& to, std::size_t& count) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) {
    throw Error(ErrorKind::InvalidParameter, "range must be from:to:count, got '" + text + "'");
  }
  try {
    from = io::parse_number(text.substr(0, a));
    to = io::parse_number(text.substr(a + 1, b - a - 1));
    const double c = io::parse_number(text.substr(b + 1));
    if (!(c >= 0.0) || c != static_cast<double>(static_cast<std::size_t>(c))) {
      throw Error(ErrorKind::InvalidParameter, "range count must be a non-negative integer");
    }
    count = static_cast<std::size_t>(c);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidParameter, "bad range '" + text + "': " + e.what());
  }
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Two-mode photon-phonon Gaussian dynamics and entanglement audit"};
  app.require_subcommand(1);

  double omega_s = 5.0;
  double omega_k = 1.0;
  double lambda = 1.0;
  double detuning = 0.0;
  std::string state_text = "vacuum";
  std::optional<double> t_max;
  std::optional<std::size_t> steps;
  std::optional<double> dt;
  std::string out = "-";
  std::string format_text = "csv";

  auto add_model_flags = [&](CLI::App* sub) {
    sub->add_option("--omega-s", omega_s, "Stokes photon angular frequency");
    sub->add_option("--omega-k", omega_k, "acoustic phonon angular frequency");
    sub->add_option("--lambda", lambda, "coupling constant");
    sub->add_option("--dt", dt, "RK4 step (default 1e-3 * min(1/lambda, 1/omega_L))");
    sub->add_option("--out", out, "output path, '-' for stdout");
  };
  auto add_run_flags = [&](CLI::App* sub) {
    add_model_flags(sub);
    sub->add_option("--detuning", detuning, "omega_L - (omega_s + omega_k); RK4 path if nonzero");
    sub->add_option("--state", state_text, "vacuum | thermal:<theta> | squeezed:<eta>");
    sub->add_option("--format", format_text, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* evolve = app.add_subcommand("evolve", "covariance trajectory with entanglement measures");
  add_run_flags(evolve);
  evolve->add_option("--t-max", t_max, "final time (default 1)");
  evolve->add_option("--steps", steps, "number of uniformly spaced samples (default 101)");

  auto* sweep = app.add_subcommand("sweep", "measures across a parameter range");
  add_run_flags(sweep);
  std::string axis_text;
  std::string range_text;
  sweep->add_option("--axis", axis_text, "lambda_t | theta | eta | detuning")->required();
  sweep->add_option("--range", range_text, "from:to:count")->required();
  sweep->add_option("--t-max", t_max, "evolution time for theta/eta/detuning axes (default 1)");

  auto* verify = app.add_subcommand("verify", "audit closed forms against the RK4 oracle");
  add_model_flags(verify);
  double theta = 0.5;
  double eta = 2.0;
  verify->add_option("--theta", theta, "thermal-phonon theta (default 0.5)");
  verify->add_option("--eta", eta, "squeezed-phonon eta (default 2)");
  verify->add_option("--t-max", t_max, "end of the time grid (default 2/lambda)");
  verify->add_option("--steps", steps, "time grid points (default 41)");
  verify->add_option("--detuning", detuning, "must be 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  const auto format = format_text == "json" ? Format::Json : Format::Csv;

  int code = kExitOk;
  const int setup = guarded(std::cerr, [&] {
    const auto params = ModelParams::at_resonance(omega_s, omega_k, lambda).with_detuning(detuning);
    if (evolve->parsed()) {
      RunConfig config;
      config.params = params;
      config.state = parse_initial_state(state_text);
      config.t_max = t_max.value_or(1.0);
      config.steps = steps.value_or(101);
      config.dt_oracle = dt;
      config.output_path = out;
      config.format = format;
      code = cmd_evolve(config, std::cerr);
    } else if (sweep->parsed()) {
      SweepSpec spec;
      spec.base = params;
      spec.state = parse_initial_state(state_text);
      spec.axis = parse_sweep_axis(axis_text);
      parse_range(range_text, spec.from, spec.to, spec.count);
      spec.t = t_max.value_or(1.0);
      code = cmd_sweep(spec, format, out, std::cerr);
    } else if (verify->parsed()) {
      VerifySpec spec;
      spec.params = params;
      spec.theta = theta;
      spec.eta = eta;
      spec.t_max = t_max.value_or(lambda > 0.0 ? 2.0 / lambda : 2.0);
      spec.steps = steps.value_or(41);
      spec.dt = dt;
      if (!(theta > 0.0)) throw Error(ErrorKind::InvalidParameter, "theta must be positive");
      if (!(eta > 0.0)) throw Error(ErrorKind::InvalidParameter, "eta must be positive");
      code = cmd_verify(spec, out, std::cerr);
    }
  });
  return setup != kExitOk ? setup : code;
}

}  // namespace sbs::cli
