#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sbs/entanglement.hpp"
#include "sbs/gaussian_core.hpp"
#include "sbs/kernels.hpp"

namespace sbs::io {

using Json = nlohmann::ordered_json;

/// 17 significant digits, lowercase scientific notation, locale independent.
std::string format_number(double v);

/// Parses a number written by format_number (or any plain decimal).
double parse_number(std::string_view text);

/// t, s_qsqs, s_qsps, ..., s_pkpk, F, eG, logneg
const std::vector<std::string>& trajectory_header();

void write_trajectory_csv(std::ostream& os, std::span<const StateRow> rows);
Json trajectory_to_json(std::span<const StateRow> rows);

/// Inverse of write_trajectory_csv. Throws ErrorKind::InvalidArgument on a
/// header or field-count mismatch.
std::vector<StateRow> read_trajectory_csv(std::istream& is);

void write_sweep_csv(std::ostream& os, SweepAxis axis, std::span<const SweepRow> rows);
Json sweep_to_json(SweepAxis axis, std::span<const SweepRow> rows);

/// {"basis": "qs,ps,qk,pk", "entries": [16 numbers, row-major]}
Json covariance_to_json(const Covariance& sigma);
/// Throws ErrorKind::MalformedMatrix for a wrong basis or entry count.
Covariance covariance_from_json(const Json& j);

/// Keys F, eG, logneg, closedF, closedEG, diffF, diffEG, verdictF, verdictEG;
/// absent closed forms and their diffs/verdicts are null.
Json to_json(const MeasureReport& report);

/// Writes `content` to `path`, or to stdout when path is "-".
/// Throws ErrorKind::Io when the file cannot be written.
void write_text(const std::string& path, const std::string& content);

}  // namespace sbs::io
