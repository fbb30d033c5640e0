#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "sbs/gaussian_core.hpp"
#include "sbs/kernels.hpp"
#include "sbs/verify.hpp"

namespace sbs::cli {

enum class Format { Csv, Json };

struct RunConfig {
  ModelParams params = ModelParams::at_resonance(5.0, 1.0, 1.0);
  InitialState state = Vacuum{};
  double t_max = 1.0;
  std::size_t steps = 101;
  /// RK4 step for detuned runs; default_time_step(params) when unset.
  std::optional<double> dt_oracle;
  std::string output_path = "-";
  Format format = Format::Csv;
};

/// Exit codes: 0 success, 1 invalid input, 2 output not writable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

/// Trajectory of the 10 covariance entries plus F, eG, logneg.
int cmd_evolve(const RunConfig& config, std::ostream& err);

/// Sweep table; `spec.t` is the fixed evolution time.
int cmd_sweep(const SweepSpec& spec, Format format, const std::string& output_path,
              std::ostream& err);

/// JSON audit report; one summary line per record goes to `err`.
int cmd_verify(const VerifySpec& spec, const std::string& output_path, std::ostream& err);

/// Parses "from:to:count".
void parse_range(const std::string& text, double& from, double& to, std::size_t& count);

/// Full command line: evolve | sweep | verify with the common flags.
int run(int argc, const char* const* argv);

}  // namespace sbs::cli
