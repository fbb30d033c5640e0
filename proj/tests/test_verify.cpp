#include "doctest.h"

#include <set>

#include "sbs/error.hpp"
#include "sbs/verify.hpp"

using namespace sbs;

TEST_CASE("verify report structure") {
  const auto report = run_verify(VerifySpec{});
  CHECK(report.times.size() == 41);
  std::set<std::pair<std::string, Frame>> seen;
  for (const auto& r : report.records) {
    CHECK(r.max_abs_dev >= 0.0);
    CHECK((r.verdict == Verdict::Match) == (r.max_abs_dev <= kMatchTolerance));
    CHECK(seen.insert({r.formula, r.frame}).second);
    CHECK(r.worst_entry.has_value() == r.formula.starts_with("eq"));
  }
  for (const char* id : {"eq2", "eq3", "eq4", "F1", "F2", "F3", "eG1", "eG2"}) {
    CHECK(seen.count({id, Frame::Lab}) == 1);
    CHECK(seen.count({id, Frame::Interaction}) == 1);
  }
  CHECK(report.records.size() == 16);
}

TEST_CASE("verify verdicts at default parameters") {
  const auto report = run_verify(VerifySpec{});
  for (const char* id : {"F1", "F2", "F3"}) {
    CHECK(report.record(id, Frame::Lab).verdict == Verdict::Match);
    CHECK(report.record(id, Frame::Interaction).verdict == Verdict::Match);
  }
  CHECK(report.record("eq2", Frame::Lab).verdict == Verdict::Match);
  CHECK(report.record("eq2", Frame::Interaction).verdict == Verdict::Mismatch);
  CHECK(report.record("eq4", Frame::Lab).verdict == Verdict::Match);

  const auto& eq3 = report.record("eq3", Frame::Lab);
  CHECK(eq3.verdict == Verdict::Mismatch);
  CHECK((eq3.worst_entry == "s_qkqk" || eq3.worst_entry == "s_pkpk"));
  CHECK(eq3.reading.has_value());

  // At t = 0 the thermal phonon has variance coth(0.5)/2 = 1.081977 against
  // the printed 1/2.
  CHECK(report.finding("eq3_phonon_variances").max_abs_dev >= 0.58);
  CHECK(report.finding("eq3_phonon_variances").verdict == Verdict::Mismatch);
  CHECK(report.finding("eq3_photon_variances").verdict == Verdict::Match);
  CHECK(report.finding("eq3_duplicate_label_reading").verdict == Verdict::Match);
  CHECK(report.finding("eq4_duplicate_label_reading").verdict == Verdict::Match);

  CHECK(report.finding("eG_frame_dependence").verdict == Verdict::Match);
  CHECK(report.finding("eG1_without_phase_factor").verdict == Verdict::Match);
  CHECK(report.record("eG1", Frame::Lab).verdict == Verdict::Mismatch);
  CHECK(report.record("eG2", Frame::Lab).verdict == Verdict::Mismatch);
}

TEST_CASE("degenerate parameters collapse onto the vacuum pattern") {
  VerifySpec spec;
  spec.theta = 20.0;
  spec.eta = 1.0;
  const auto report = run_verify(spec);
  for (const Frame f : {Frame::Lab, Frame::Interaction}) {
    const auto v2 = report.record("eq2", f).verdict;
    CHECK(report.record("eq3", f).verdict == v2);
    CHECK(report.record("eq4", f).verdict == v2);
    CHECK(std::abs(report.record("eq3", f).max_abs_dev - report.record("eq2", f).max_abs_dev) <=
          1e-8);
    CHECK(report.record("eG2", f).verdict == report.record("eG1", f).verdict);
  }
}

TEST_CASE("verify is deterministic and needs resonance") {
  VerifySpec spec;
  spec.steps = 11;
  CHECK(to_json(run_verify(spec)).dump() == to_json(run_verify(spec)).dump());

  spec.params = spec.params.with_detuning(0.2);
  try {
    run_verify(spec);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedRegime);
  }
}

TEST_CASE("verify json fields") {
  VerifySpec spec;
  spec.steps = 5;
  const auto j = to_json(run_verify(spec));
  const auto& rec = j["records"][0];
  for (const char* key : {"formula", "frame", "max_abs_dev", "verdict", "worst_entry"}) {
    CHECK(rec.contains(key));
  }
  CHECK(j["findings"].size() >= 5);
}
