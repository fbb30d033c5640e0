#pragma once

// Conventions and value types for two-mode (Stokes photon / acoustic phonon)
// Gaussian states.
//
// Quadratures: q = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)), hbar = 1,
// so the vacuum has variance 1/2 per quadrature. Every 4x4 matrix in this
// library uses the basis order (q_s, p_s, q_k, p_k).

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

namespace sbs {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

enum class Quadrature : int { qs = 0, ps = 1, qk = 2, pk = 3 };

inline constexpr std::string_view kBasisLabel = "qs,ps,qk,pk";

/// One upper-triangle entry of a covariance matrix.
struct EntryIndex {
  Quadrature row;
  Quadrature col;
  std::string_view name;  // e.g. "qspk"
};

/// The ten independent entries, in the fixed export order.
inline constexpr std::array<EntryIndex, 10> kUniqueEntries{{
    {Quadrature::qs, Quadrature::qs, "qsqs"},
    {Quadrature::qs, Quadrature::ps, "qsps"},
    {Quadrature::qs, Quadrature::qk, "qsqk"},
    {Quadrature::qs, Quadrature::pk, "qspk"},
    {Quadrature::ps, Quadrature::ps, "psps"},
    {Quadrature::ps, Quadrature::qk, "psqk"},
    {Quadrature::ps, Quadrature::pk, "pspk"},
    {Quadrature::qk, Quadrature::qk, "qkqk"},
    {Quadrature::qk, Quadrature::pk, "qkpk"},
    {Quadrature::pk, Quadrature::pk, "pkpk"},
}};

/// Frequencies and coupling of the driven photon-phonon Hamiltonian.
/// All quantities share one arbitrary angular-frequency unit.
struct ModelParams {
  double omega_s = 1.0;   // Stokes photon
  double omega_k = 1.0;   // acoustic phonon
  double omega_l = 2.0;   // classical laser drive
  double coupling = 0.0;  // lambda, laser amplitude folded in

  /// Parameters with the laser tuned to omega_s + omega_k.
  static ModelParams at_resonance(double omega_s, double omega_k, double coupling);

  ModelParams with_detuning(double detuning) const;

  double detuning() const { return omega_l - (omega_s + omega_k); }
  bool resonant() const { return detuning() == 0.0; }

  /// Throws ErrorKind::InvalidParameter if any invariant is violated.
  void validate() const;
};

struct Vacuum {};

/// Phonon in thermal equilibrium; theta = hbar omega_k / (2 k T).
struct ThermalPhonon {
  double theta;
};

/// Phonon in a squeezed vacuum; eta = 1 is the unsqueezed vacuum.
struct SqueezedPhonon {
  double eta;
};

/// The photon mode always starts in its vacuum.
using InitialState = std::variant<Vacuum, ThermalPhonon, SqueezedPhonon>;

/// Parses "vacuum", "thermal:<theta>" or "squeezed:<eta>".
InitialState parse_initial_state(std::string_view text);
std::string to_string(const InitialState& state);
void validate(const InitialState& state);

/// Symmetrized second moments of the quadratures of a zero-mean state.
class Covariance {
 public:
  Covariance() : m_(Mat4::Zero()) {}
  explicit Covariance(const Mat4& m) : m_(m) {}

  static Covariance vacuum() { return Covariance(0.5 * Mat4::Identity()); }

  const Mat4& matrix() const { return m_; }

  double operator()(Quadrature a, Quadrature b) const {
    return m_(static_cast<int>(a), static_cast<int>(b));
  }
  double operator()(const EntryIndex& e) const { return (*this)(e.row, e.col); }

  Mat2 photon_block() const { return m_.topLeftCorner<2, 2>(); }
  Mat2 phonon_block() const { return m_.bottomRightCorner<2, 2>(); }
  Mat2 intermode_block() const { return m_.topRightCorner<2, 2>(); }

  double max_asymmetry() const { return (m_ - m_.transpose()).cwiseAbs().maxCoeff(); }

  friend bool operator==(const Covariance& a, const Covariance& b) { return a.m_ == b.m_; }

 private:
  Mat4 m_;
};

/// Largest entrywise absolute difference.
double max_abs_diff(const Covariance& a, const Covariance& b);

/// Block-diagonal Omega with [[0, 1], [-1, 0]] per mode.
const Mat4& symplectic_form();

Mat4 block_diag(const Mat2& photon, const Mat2& phonon);

/// Phase-space rotation by `angle`: free evolution of one mode for
/// omega t = angle maps (q, p) to (q cos + p sin, p cos - q sin).
Mat2 rotation(double angle);

Covariance initial_covariance(const InitialState& state);

/// Symplectic eigenvalues {nu_minus, nu_plus} of a two-mode covariance.
/// Exact per-mode sqrt(det) for product states.
std::array<double, 2> symplectic_eigenvalues(const Covariance& sigma);

/// Mirror reflection p_k -> -p_k applied to the covariance.
Covariance partial_transpose(const Covariance& sigma);

inline constexpr double kBonaFideTolerance = 1e-9;

struct BonaFideResult {
  bool bona_fide;
  double min_symplectic_eigenvalue;
  std::string diagnostic;
};

/// Uncertainty-relation test sigma + (i/2) Omega >= 0 via symplectic
/// eigenvalues. Throws ErrorKind::MalformedMatrix when the input is not
/// symmetric to 1e-9.
BonaFideResult check_bona_fide(const Covariance& sigma);

}  // namespace sbs
