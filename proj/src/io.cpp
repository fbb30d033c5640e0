#include "sbs/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sbs/error.hpp"

namespace sbs::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
Json optional_number(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const auto* last = text.data() + text.size();
  const auto res = std::from_chars(text.data(), last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

const std::vector<std::string>& trajectory_header() {
  static const std::vector<std::string> header = [] {
    std::vector<std::string> h{"t"};
    for (const auto& e : kUniqueEntries) h.push_back("s_" + std::string(e.name));
    h.insert(h.end(), {"F", "eG", "logneg"});
    return h;
  }();
  return header;
}

void write_trajectory_csv(std::ostream& os, std::span<const StateRow> rows) {
  const auto& header = trajectory_header();
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& r : rows) {
    os << format_number(r.t);
    for (const auto& e : kUniqueEntries) os << ',' << format_number(r.sigma(e));
    os << ',' << format_number(r.F) << ',' << format_number(r.eG) << ','
       << format_number(r.log_negativity) << '\n';
  }
}

Json trajectory_to_json(std::span<const StateRow> rows) {
  const auto& header = trajectory_header();
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    std::size_t k = 0;
    row[header[k++]] = r.t;
    for (const auto& e : kUniqueEntries) row[header[k++]] = r.sigma(e);
    row[header[k++]] = r.F;
    row[header[k++]] = r.eG;
    row[header[k++]] = r.log_negativity;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<StateRow> read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || split(line, ',') != trajectory_header()) {
    throw Error(ErrorKind::InvalidArgument, "unexpected trajectory header");
  }
  std::vector<StateRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != trajectory_header().size()) {
      throw Error(ErrorKind::InvalidArgument, "trajectory row has wrong field count");
    }
    StateRow r;
    std::size_t k = 0;
    r.t = parse_number(fields[k++]);
    Mat4 m;
    for (const auto& e : kUniqueEntries) {
      const double v = parse_number(fields[k++]);
      m(static_cast<int>(e.row), static_cast<int>(e.col)) = v;
      m(static_cast<int>(e.col), static_cast<int>(e.row)) = v;
    }
    r.sigma = Covariance(m);
    r.F = parse_number(fields[k++]);
    r.eG = parse_number(fields[k++]);
    r.log_negativity = parse_number(fields[k++]);
    rows.push_back(r);
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, SweepAxis axis, std::span<const SweepRow> rows) {
  os << to_string(axis) << ",t,F,eG,logneg\n";
  for (const auto& r : rows) {
    os << format_number(r.value) << ',' << format_number(r.t) << ',' << format_number(r.F)
       << ',' << format_number(r.eG) << ',' << format_number(r.log_negativity) << '\n';
  }
}

Json sweep_to_json(SweepAxis axis, std::span<const SweepRow> rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row[std::string(to_string(axis))] = r.value;
    row["t"] = r.t;
    row["F"] = r.F;
    row["eG"] = r.eG;
    row["logneg"] = r.log_negativity;
    out.push_back(std::move(row));
  }
  return out;
}

Json covariance_to_json(const Covariance& sigma) {
  Json entries = Json::array();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) entries.push_back(sigma.matrix()(i, j));
  }
  Json j;
  j["basis"] = std::string(kBasisLabel);
  j["entries"] = std::move(entries);
  return j;
}

Covariance covariance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("entries")) {
    throw Error(ErrorKind::MalformedMatrix, "covariance JSON needs 'basis' and 'entries'");
  }
  if (!j["basis"].is_string() || j["basis"].get<std::string>() != kBasisLabel) {
    throw Error(ErrorKind::MalformedMatrix,
                "covariance basis must be '" + std::string(kBasisLabel) + "'");
  }
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != 16) {
    throw Error(ErrorKind::MalformedMatrix, "covariance needs exactly 16 entries");
  }
  Mat4 m;
  for (int k = 0; k < 16; ++k) {
    if (!entries[k].is_number()) {
      throw Error(ErrorKind::MalformedMatrix, "covariance entries must be numbers");
    }
    m(k / 4, k % 4) = entries[k].get<double>();
  }
  return Covariance(m);
}

Json to_json(const MeasureReport& r) {
  auto verdict = [](const std::optional<Verdict>& v) {
    return v ? Json(std::string(to_string(*v))) : Json(nullptr);
  };
  Json j;
  j["F"] = r.F;
  j["eG"] = r.eG;
  j["logneg"] = r.log_negativity;
  j["closedF"] = optional_number(r.closed_F);
  j["closedEG"] = optional_number(r.closed_eG);
  j["diffF"] = optional_number(r.diff_F);
  j["diffEG"] = optional_number(r.diff_eG);
  j["verdictF"] = verdict(r.verdict_F);
  j["verdictEG"] = verdict(r.verdict_eG);
  return j;
}

void write_text(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  os << content;
  os.flush();
  if (!os) throw Error(ErrorKind::Io, "failed writing '" + path + "'");
}

}  // namespace sbs::io
