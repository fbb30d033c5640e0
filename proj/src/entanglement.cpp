#include "sbs/entanglement.hpp"

#include <cmath>
#include <sstream>

#include "sbs/error.hpp"

namespace sbs {

namespace {

double checked_inverse_sqrt(double det, const char* what) {
  if (!(det > 0.0)) {
    std::ostringstream os;
    os << "determinant of " << what << " is " << det << "; expected positive";
    throw Error(ErrorKind::InvalidState, os.str());
  }
  return 1.0 / std::sqrt(det);
}

Mat2 inverse2(const Mat2& m, const char* what) {
  const double det = m.determinant();
  if (!(std::abs(det) > kMinDeterminant)) {
    std::ostringstream os;
    os << what << " is singular (determinant " << det << ")";
    throw Error(ErrorKind::InvalidState, os.str());
  }
  Mat2 inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv / det;
}

double norm1(const Mat4& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

}  // namespace

double measure_F(const Covariance& sigma) {
  return sigma.intermode_block().squaredNorm();
}

EGDecomposition decompose_eG(const Covariance& sigma) {
  const Mat4& s = sigma.matrix();
  const double det = s.determinant();
  if (!(det > kMinDeterminant)) {
    std::ostringstream os;
    os << "covariance determinant " << det << " is too small to invert";
    throw Error(ErrorKind::IllConditioned, os.str());
  }
  const Mat4 inv = s.inverse();
  const double cond = norm1(s) * norm1(inv);
  if (!(cond <= kMaxConditionNumber)) {
    std::ostringstream os;
    os << "covariance condition number " << cond << " exceeds " << kMaxConditionNumber
       << " (determinant " << det << ")";
    throw Error(ErrorKind::IllConditioned, os.str());
  }

  EGDecomposition d;
  d.B = inv.topLeftCorner<2, 2>();
  d.C = inv.topRightCorner<2, 2>();
  d.D = inv.bottomRightCorner<2, 2>();
  const Mat2 schur_b = d.B - d.C * inverse2(d.D, "phonon block of the inverse") * d.C.transpose();
  const Mat2 schur_d = d.D - d.C.transpose() * inverse2(d.B, "photon block of the inverse") * d.C;
  d.sigma1 = inverse2(schur_b, "photon Schur complement");
  d.sigma2 = inverse2(schur_d, "phonon Schur complement");
  d.sigma_tilde = block_diag(d.sigma1, d.sigma2);
  return d;
}

double measure_eG(const Covariance& sigma) {
  const auto d = decompose_eG(sigma);
  const double a = 0.25 * checked_inverse_sqrt(sigma.matrix().determinant(), "sigma");
  const double b = 0.25 * checked_inverse_sqrt(d.sigma_tilde.determinant(), "sigma_tilde");
  const double c =
      2.0 * checked_inverse_sqrt((sigma.matrix() + d.sigma_tilde).determinant(),
                                 "sigma + sigma_tilde");
  return a + b - c;
}

double log_negativity(const Covariance& sigma) {
  const auto check = check_bona_fide(sigma);
  if (!check.bona_fide) {
    throw Error(ErrorKind::InvalidState, "log-negativity needs a bona fide state: " +
                                             check.diagnostic);
  }
  const double nu = symplectic_eigenvalues(partial_transpose(sigma))[0];
  return std::max(0.0, -std::log2(2.0 * nu));
}

std::string_view to_string(Verdict v) { return v == Verdict::Match ? "MATCH" : "MISMATCH"; }

Verdict judge(double abs_diff, double tolerance) {
  return abs_diff <= tolerance ? Verdict::Match : Verdict::Mismatch;
}

MeasureReport full_report(const Covariance& sigma,
                          const std::optional<closed_form::CaseLabel>& which_case, double t,
                          const ModelParams& params, double tolerance) {
  MeasureReport r;
  r.F = measure_F(sigma);
  r.eG = measure_eG(sigma);
  r.log_negativity = log_negativity(sigma);
  if (!which_case) return r;

  r.closed_F = closed_form::correlation_measure(*which_case, t, params.coupling);
  r.diff_F = std::abs(r.F - *r.closed_F);
  r.verdict_F = judge(*r.diff_F, tolerance);
  if (!std::holds_alternative<closed_form::SqueezedCase>(*which_case)) {
    r.closed_eG =
        closed_form::gaussian_distance_measure(*which_case, t, params.coupling, params.omega_l);
    r.diff_eG = std::abs(r.eG - *r.closed_eG);
    r.verdict_eG = judge(*r.diff_eG, tolerance);
  }
  return r;
}

}  // namespace sbs
