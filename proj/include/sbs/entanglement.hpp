#pragma once

#include <optional>
#include <string_view>

#include "sbs/closed_forms.hpp"
#include "sbs/gaussian_core.hpp"

namespace sbs {

/// Squared Frobenius norm of the intermode block:
///   s_{qs qk}^2 + s_{ps pk}^2 + s_{qs pk}^2 + s_{ps qk}^2.
double measure_F(const Covariance& sigma);

/// Block pieces of the Gaussian distance measure. With sigma^{-1} =
/// [[B, C], [C^T, D]], the reference state is
/// sigma_tilde = sigma1 (+) sigma2 where
///   sigma1^{-1} = B - C D^{-1} C^T,  sigma2^{-1} = D - C^T B^{-1} C.
struct EGDecomposition {
  Mat2 B;
  Mat2 C;
  Mat2 D;
  Mat2 sigma1;
  Mat2 sigma2;
  Mat4 sigma_tilde;
};

inline constexpr double kMinDeterminant = 1e-30;
inline constexpr double kMaxConditionNumber = 1e12;

/// Throws ErrorKind::IllConditioned for det sigma <= 1e-30 or a 1-norm
/// condition number above 1e12, ErrorKind::InvalidState when a Schur
/// complement is not invertible.
EGDecomposition decompose_eG(const Covariance& sigma);

/// 1/(4 sqrt det sigma) + 1/(4 sqrt det sigma_tilde)
///   - 2/sqrt det(sigma + sigma_tilde).
double measure_eG(const Covariance& sigma);

/// max(0, -log2(2 nu)), nu the smallest symplectic eigenvalue of the partial
/// transpose. Throws ErrorKind::InvalidState for a non-bona-fide input.
double log_negativity(const Covariance& sigma);

inline constexpr double kMatchTolerance = 1e-6;

enum class Verdict { Match, Mismatch };

std::string_view to_string(Verdict v);
Verdict judge(double abs_diff, double tolerance = kMatchTolerance);

struct MeasureReport {
  double F = 0.0;
  double eG = 0.0;
  double log_negativity = 0.0;
  std::optional<double> closed_F;
  std::optional<double> closed_eG;
  std::optional<double> diff_F;
  std::optional<double> diff_eG;
  std::optional<Verdict> verdict_F;
  std::optional<Verdict> verdict_eG;
};

/// All three measures of `sigma`; with a case, also the printed closed forms
/// at (t, params) and their absolute discrepancies.
MeasureReport full_report(const Covariance& sigma,
                          const std::optional<closed_form::CaseLabel>& which_case, double t,
                          const ModelParams& params, double tolerance = kMatchTolerance);

}  // namespace sbs
