#pragma once

// Printed closed-form results for the three initial-state cases, evaluated
// verbatim. Nothing here touches the dynamics code: these are the targets
// that the numerical oracle audits.

#include <string_view>
#include <variant>

#include "sbs/gaussian_core.hpp"

namespace sbs::closed_form {

struct VacuumCase {};
struct ThermalCase {
  double theta;
};
struct SqueezedCase {
  double eta;
};

/// Each case carries exactly the parameters its formulas need.
using CaseLabel = std::variant<VacuumCase, ThermalCase, SqueezedCase>;

CaseLabel case_for(const InitialState& state);
std::string_view case_name(const CaseLabel& c);  // "case1" | "case2" | "case3"

/// Both modes start in vacuum.
/// Diagonals cosh(2 lambda t)/2; intermode block
///   -(sinh(2 lambda t)/2) [[sin wL t, cos wL t], [cos wL t, -sin wL t]].
Covariance vacuum_start_covariance(double t, const ModelParams& params);

/// Phonon starts thermal. All four diagonals carry the printed
/// sinh^2(lambda t)(1 + coth theta)/2 + 1/2. The printed pair labelled
/// "p_s q_k = p_k p_s" is read as sigma_{p_s q_k} = sigma_{q_s p_k}.
Covariance thermal_start_covariance(double t, const ModelParams& params, double theta);

/// Phonon starts squeezed, with explicit w_s t and w_k t phases. Of the two
/// printed lines labelled "p_s q_k", the one proportional to
/// sinh^2(lambda t) sin(2 w_s t) is read as sigma_{p_s q_s}.
Covariance squeezed_start_covariance(double t, const ModelParams& params, double eta);

Covariance covariance(const CaseLabel& c, double t, const ModelParams& params);

/// Sum of squared intermode covariances:
///   vacuum   sinh^2(2 lambda t)/2
///   thermal  sinh^2(2 lambda t)(1 + coth theta)^2/8
///   squeezed sinh^2(2 lambda t)(1 + 1/eta)^2 (eta^2 + 1)/16
double correlation_measure(const CaseLabel& c, double t, double coupling);

/// 2 / (coth(2 theta) + 1) = 1 - exp(-4 theta).
double tau(double theta);

/// Printed Gaussian distance measure with x = cos^2(wL t) sinh^2(2 lambda t):
///   vacuum   x(3x + 2)/((1 + x)(4 + 3x))
///   thermal  x(3x + 2 tau)/((tau + x)(4 tau + 3x))
/// No squeezed-case expression exists (ErrorKind::NoClosedForm).
double gaussian_distance_measure(const CaseLabel& c, double t, double coupling, double omega_l);

}  // namespace sbs::closed_form
