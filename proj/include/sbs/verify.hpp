#pragma once

// Audit of the printed closed forms against the RK4 moment oracle.
//
// For each initial-state case the oracle trajectory is compared against the
// printed covariance, correlation measure and Gaussian distance measure, in
// the lab frame and in the interaction frame (free rotations of both modes
// removed). A handful of targeted findings accompany the records.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sbs/entanglement.hpp"
#include "sbs/gaussian_core.hpp"
#include "sbs/io.hpp"

namespace sbs {

enum class Frame { Lab, Interaction };

std::string_view to_string(Frame f);

struct VerifySpec {
  ModelParams params = ModelParams::at_resonance(5.0, 1.0, 1.0);
  double t_max = 2.0;
  std::size_t steps = 41;
  double theta = 0.5;
  double eta = 2.0;
  /// RK4 step; default_time_step(params) when unset.
  std::optional<double> dt;
  double tolerance = kMatchTolerance;
};

struct EntryDeviation {
  std::string entry;  // "s_qsqs" ...
  double max_abs_dev;
};

struct VerifyRecord {
  std::string case_name;  // case1 | case2 | case3
  std::string formula;    // eq2 | eq3 | eq4 | F1 | F2 | F3 | eG1 | eG2
  Frame frame;
  double max_abs_dev;
  Verdict verdict;
  double worst_time;
  /// Covariance formulas only.
  std::optional<std::string> worst_entry;
  std::vector<EntryDeviation> entries;
  std::optional<std::string> reading;
};

struct Finding {
  std::string id;
  double max_abs_dev;
  Verdict verdict;
  std::string description;
};

struct VerifyReport {
  VerifySpec spec;
  double dt;
  std::vector<double> times;
  std::vector<VerifyRecord> records;
  std::vector<Finding> findings;

  const VerifyRecord& record(std::string_view formula, Frame frame) const;
  const Finding& finding(std::string_view id) const;
};

/// Needs resonant parameters (ErrorKind::UnsupportedRegime otherwise).
VerifyReport run_verify(const VerifySpec& spec);

io::Json to_json(const VerifyReport& report);

}  // namespace sbs
