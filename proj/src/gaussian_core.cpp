#include "sbs/gaussian_core.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "sbs/error.hpp"

namespace sbs {

namespace {

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorKind::InvalidParameter, msg);
}

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    invalid("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ModelParams ModelParams::at_resonance(double omega_s, double omega_k, double coupling) {
  return ModelParams{omega_s, omega_k, omega_s + omega_k, coupling};
}

ModelParams ModelParams::with_detuning(double detuning) const {
  ModelParams p = *this;
  p.omega_l = omega_s + omega_k + detuning;
  return p;
}

void ModelParams::validate() const {
  if (!std::isfinite(omega_s) || !std::isfinite(omega_k) || !std::isfinite(omega_l) ||
      !std::isfinite(coupling)) {
    invalid("model parameters must be finite");
  }
  if (omega_s <= 0.0) invalid("omega_s must be positive");
  if (omega_k <= 0.0) invalid("omega_k must be positive");
  if (coupling < 0.0) invalid("coupling lambda must be non-negative");
}

void validate(const InitialState& state) {
  if (const auto* th = std::get_if<ThermalPhonon>(&state)) {
    if (!(th->theta > 0.0) || !std::isfinite(th->theta)) invalid("theta must be positive");
  } else if (const auto* sq = std::get_if<SqueezedPhonon>(&state)) {
    if (!(sq->eta > 0.0) || !std::isfinite(sq->eta)) invalid("eta must be positive");
  }
}

InitialState parse_initial_state(std::string_view text) {
  if (text == "vacuum") return Vacuum{};
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const auto kind = text.substr(0, colon);
    const auto value = text.substr(colon + 1);
    InitialState state;
    if (kind == "thermal") {
      state = ThermalPhonon{parse_double(value, "theta")};
    } else if (kind == "squeezed") {
      state = SqueezedPhonon{parse_double(value, "eta")};
    } else {
      invalid("unknown state kind '" + std::string(kind) + "'");
    }
    validate(state);
    return state;
  }
  invalid("state must be vacuum, thermal:<theta> or squeezed:<eta>; got '" +
          std::string(text) + "'");
}

std::string to_string(const InitialState& state) {
  std::ostringstream os;
  os.precision(17);
  if (const auto* th = std::get_if<ThermalPhonon>(&state)) {
    os << "thermal:" << th->theta;
  } else if (const auto* sq = std::get_if<SqueezedPhonon>(&state)) {
    os << "squeezed:" << sq->eta;
  } else {
    os << "vacuum";
  }
  return os.str();
}

double max_abs_diff(const Covariance& a, const Covariance& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

const Mat4& symplectic_form() {
  static const Mat4 omega = [] {
    Mat4 m = Mat4::Zero();
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    m(2, 3) = 1.0;
    m(3, 2) = -1.0;
    return m;
  }();
  return omega;
}

Mat4 block_diag(const Mat2& photon, const Mat2& phonon) {
  Mat4 m = Mat4::Zero();
  m.topLeftCorner<2, 2>() = photon;
  m.bottomRightCorner<2, 2>() = phonon;
  return m;
}

Mat2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat2 r;
  r << c, s, -s, c;
  return r;
}

Covariance initial_covariance(const InitialState& state) {
  validate(state);
  Mat4 m = Mat4::Zero();
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  if (const auto* th = std::get_if<ThermalPhonon>(&state)) {
    // n + 1/2 = coth(theta)/2
    const double v = 0.5 / std::tanh(th->theta);
    m(2, 2) = v;
    m(3, 3) = v;
  } else if (const auto* sq = std::get_if<SqueezedPhonon>(&state)) {
    m(2, 2) = 0.5 / sq->eta;
    m(3, 3) = 0.5 * sq->eta;
  } else {
    m(2, 2) = 0.5;
    m(3, 3) = 0.5;
  }
  return Covariance(m);
}

namespace {

std::array<double, 2> sorted_pair(double a, double b) {
  return a <= b ? std::array<double, 2>{a, b} : std::array<double, 2>{b, a};
}

// Invariant formula; only used when sigma has no Cholesky factor.
std::array<double, 2> eigenvalues_from_invariants(const Covariance& sigma) {
  const double det_a = sigma.photon_block().determinant();
  const double det_b = sigma.phonon_block().determinant();
  const double det_c = sigma.intermode_block().determinant();
  const double det_s = sigma.matrix().determinant();
  const double delta = det_a + det_b + 2.0 * det_c;
  const double disc = std::max(0.0, delta * delta - 4.0 * det_s);
  const double nu_plus_sq = 0.5 * (delta + std::sqrt(disc));
  const double nu_minus_sq = nu_plus_sq > 0.0 ? det_s / nu_plus_sq : 0.0;
  return {std::sqrt(std::max(0.0, nu_minus_sq)), std::sqrt(std::max(0.0, nu_plus_sq))};
}

}  // namespace

std::array<double, 2> symplectic_eigenvalues(const Covariance& sigma) {
  if (sigma.intermode_block().isZero(0.0)) {
    return sorted_pair(std::sqrt(std::max(0.0, sigma.photon_block().determinant())),
                       std::sqrt(std::max(0.0, sigma.phonon_block().determinant())));
  }
  const Eigen::LLT<Mat4> llt(sigma.matrix());
  if (llt.info() != Eigen::Success) return eigenvalues_from_invariants(sigma);
  // With sigma = L L^T, Omega sigma is similar to the antisymmetric
  // L^T Omega L, whose singular values are nu_-, nu_-, nu_+, nu_+.
  const Mat4 l = llt.matrixL();
  const Mat4 k = l.transpose() * symplectic_form() * l;
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Mat4>(k).singularValues();
  return {0.5 * (sv(2) + sv(3)), 0.5 * (sv(0) + sv(1))};
}

Covariance partial_transpose(const Covariance& sigma) {
  Mat4 m = sigma.matrix();
  m.row(3) *= -1.0;
  m.col(3) *= -1.0;
  return Covariance(m);
}

BonaFideResult check_bona_fide(const Covariance& sigma) {
  const double asym = sigma.max_asymmetry();
  if (!(asym <= kBonaFideTolerance)) {
    std::ostringstream os;
    os << "covariance is not symmetric (max asymmetry " << asym << ")";
    throw Error(ErrorKind::MalformedMatrix, os.str());
  }
  const Mat4 sym = 0.5 * (sigma.matrix() + sigma.matrix().transpose());
  const auto nu = symplectic_eigenvalues(Covariance(sym));
  BonaFideResult result{false, nu[0], {}};
  std::ostringstream os;
  os.precision(17);
  if (Eigen::LLT<Mat4>(sym).info() != Eigen::Success) {
    os << "covariance is not positive definite";
    result.diagnostic = os.str();
    return result;
  }
  result.bona_fide = nu[0] >= 0.5 - kBonaFideTolerance;
  os << "min symplectic eigenvalue " << nu[0];
  if (!result.bona_fide) os << " < 1/2 (uncertainty relation violated)";
  result.diagnostic = os.str();
  return result;
}

}  // namespace sbs
