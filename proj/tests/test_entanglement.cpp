#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sbs/closed_forms.hpp"
#include "sbs/dynamics.hpp"
#include "sbs/entanglement.hpp"
#include "sbs/error.hpp"

using namespace sbs;
namespace cf = sbs::closed_form;

namespace {

const ModelParams kParams = ModelParams::at_resonance(5.0, 1.0, 1.0);

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected sbs::Error");
  return ErrorKind::Io;
}

Covariance random_product(std::mt19937_64& rng) {
  return Covariance(block_diag(oracle::random_single_mode(rng), oracle::random_single_mode(rng)));
}

}  // namespace

TEST_CASE("measure_F") {
  CHECK(measure_F(Covariance::vacuum()) == 0.0);
  const auto p = ModelParams::at_resonance(3.0 * std::numbers::pi, std::numbers::pi, 1.0);
  CHECK(measure_F(cf::vacuum_start_covariance(0.5, p)) ==
        doctest::Approx(0.6905489227709079).epsilon(1e-13));
  const auto oracle_state =
      integrate_moments(Covariance::vacuum(), 0.5, kParams, default_time_step(kParams));
  CHECK(std::abs(measure_F(oracle_state) - 0.6905489227709079) <= 1e-7);

  SUBCASE("zero iff the intermode block vanishes") {
    Mat4 m = 0.5 * Mat4::Identity();
    m(1, 2) = m(2, 1) = 1e-3;
    CHECK(measure_F(Covariance(m)) > 0.0);
    CHECK(measure_F(initial_covariance(ThermalPhonon{0.2})) == 0.0);
  }
}

TEST_CASE("measure_eG") {
  CHECK(std::abs(measure_eG(Covariance::vacuum())) <= 1e-12);
  CHECK(std::abs(measure_eG(cf::vacuum_start_covariance(0.0, kParams))) <= 1e-12);

  SUBCASE("decomposition reproduces the marginal blocks") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
      const Covariance s(oracle::random_bona_fide(rng));
      const auto d = decompose_eG(s);
      CHECK((d.sigma1 - s.photon_block()).cwiseAbs().maxCoeff() <= 1e-9);
      CHECK((d.sigma2 - s.phonon_block()).cwiseAbs().maxCoeff() <= 1e-9);
      CHECK(measure_eG(s) == doctest::Approx(oracle::distance_measure(s.matrix())).epsilon(1e-9));
    }
  }
  SUBCASE("printed vacuum-case value at zero laser phase") {
    const auto p = ModelParams::at_resonance(3.0 * std::numbers::pi, std::numbers::pi, 1.0);
    const double direct = measure_eG(cf::vacuum_start_covariance(0.5, p));
    const double printed = cf::gaussian_distance_measure(cf::VacuumCase{}, 0.5, 1.0, p.omega_l);
    CHECK(printed == doctest::Approx(0.43757085044438656).epsilon(1e-13));
    CHECK(std::abs(direct - printed) <= 1e-9);
  }
  SUBCASE("singular input") {
    Mat4 m = 0.5 * Mat4::Identity();
    m(3, 3) = 0.0;
    CHECK(kind_of([&] { measure_eG(Covariance(m)); }) == ErrorKind::IllConditioned);
  }
  SUBCASE("badly conditioned input") {
    Mat4 m = Mat4::Identity();
    m(0, 0) = 1e7;
    m(1, 1) = 1e-7;
    m(2, 2) = 1e-7;
    m(3, 3) = 1e7;
    CHECK(kind_of([&] { measure_eG(Covariance(m)); }) == ErrorKind::IllConditioned);
  }
  SUBCASE("negative determinant under a root") {
    // det sigma = 3 > 0 but det A * det B = -1.
    Mat4 m = Mat4::Zero();
    m.diagonal() << 1.0, -1.0, -1.0, -1.0;
    m(1, 3) = m(3, 1) = 2.0;
    CHECK(m.determinant() == doctest::Approx(3.0));
    CHECK(kind_of([&] { measure_eG(Covariance(m)); }) == ErrorKind::InvalidState);
  }
}

TEST_CASE("log_negativity") {
  CHECK(log_negativity(Covariance::vacuum()) == 0.0);
  CHECK(log_negativity(initial_covariance(ThermalPhonon{0.3})) == 0.0);
  const auto s = propagate(Covariance::vacuum(), 0.5, kParams);
  CHECK(std::abs(log_negativity(s) - 1.4426950408889634) <= 1e-8);

  SUBCASE("matches the partial-transpose eigenproblem") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
      const Covariance r(oracle::random_bona_fide(rng));
      const double nu = oracle::symplectic_eigenvalues(partial_transpose(r).matrix())[0];
      CHECK(log_negativity(r) ==
            doctest::Approx(std::max(0.0, -std::log2(2.0 * nu))).epsilon(1e-8));
    }
  }
  SUBCASE("rejects non-physical input") {
    Mat4 m = Mat4::Zero();
    m.diagonal() << 0.1, 0.1, 0.5, 0.5;
    CHECK(kind_of([&] { log_negativity(Covariance(m)); }) == ErrorKind::InvalidState);
  }
}

TEST_CASE("measure invariances") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);

  SUBCASE("local rotations") {
    for (int i = 0; i < 200; ++i) {
      const Covariance s(oracle::random_bona_fide(rng));
      const auto r = to_local_rotation_frame(s, angle(rng), angle(rng));
      CHECK(std::abs(measure_F(r) - measure_F(s)) <= 1e-12 * std::max(1.0, measure_F(s)));
      CHECK(std::abs(measure_eG(r) - measure_eG(s)) <= 1e-9);
    }
  }
  SUBCASE("product states have zero eG") {
    for (int i = 0; i < 50; ++i) {
      CHECK(std::abs(measure_eG(random_product(rng))) <= 1e-10);
    }
  }
  SUBCASE("F is zero exactly on products") {
    for (int i = 0; i < 20; ++i) CHECK(measure_F(random_product(rng)) == 0.0);
  }
}

TEST_CASE("two-mode squeezing from vacuum") {
  double prev_f = -1.0;
  double prev_eg = -1.0;
  double prev_ln = -1.0;
  for (int i = 0; i <= 40; ++i) {
    const double lt = 0.05 * i;
    const auto s = propagate(Covariance::vacuum(), lt, kParams);
    const double ln = log_negativity(s);
    CHECK(std::abs(ln - 2.0 * lt / std::numbers::ln2) <= 1e-8);
    const double f = measure_F(s);
    const double eg = measure_eG(s);
    CHECK(f >= prev_f);
    CHECK(eg >= prev_eg - 1e-15);
    CHECK(ln >= prev_ln);
    prev_f = f;
    prev_eg = eg;
    prev_ln = ln;
  }
}

TEST_CASE("full report") {
  SUBCASE("vacuum at t = 0") {
    const auto r = full_report(Covariance::vacuum(), cf::VacuumCase{}, 0.0, kParams);
    CHECK(r.F == 0.0);
    CHECK(std::abs(r.eG) <= 1e-12);
    CHECK(r.closed_F == 0.0);
    CHECK(r.closed_eG == 0.0);
    CHECK(r.verdict_F == Verdict::Match);
    CHECK(r.verdict_eG == Verdict::Match);
  }
  SUBCASE("vacuum case on the printed covariance") {
    const auto s = cf::vacuum_start_covariance(0.5, kParams);
    const auto r = full_report(s, cf::VacuumCase{}, 0.5, kParams);
    REQUIRE(r.diff_F);
    CHECK(*r.diff_F <= 1e-12);
  }
  SUBCASE("squeezed case has no closed eG") {
    const auto s = propagate(initial_covariance(SqueezedPhonon{2.0}), 0.5, kParams);
    const auto r = full_report(s, cf::SqueezedCase{2.0}, 0.5, kParams);
    CHECK(r.closed_F.has_value());
    CHECK(r.diff_F.has_value());
    CHECK_FALSE(r.closed_eG.has_value());
    CHECK_FALSE(r.diff_eG.has_value());
    CHECK_FALSE(r.verdict_eG.has_value());
  }
  SUBCASE("no case, no closed forms") {
    const auto r = full_report(Covariance::vacuum(), std::nullopt, 0.0, kParams);
    CHECK_FALSE(r.closed_F.has_value());
    CHECK_FALSE(r.verdict_F.has_value());
  }
}
