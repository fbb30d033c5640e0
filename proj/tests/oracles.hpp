#pragma once

// Test-only reference computations, independent of the library's code paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "sbs/gaussian_core.hpp"

namespace sbs::oracle {

/// Symplectic eigenvalues as |Im| of the eigenvalues of Omega sigma, sorted.
inline std::array<double, 2> symplectic_eigenvalues(const Mat4& sigma) {
  Eigen::EigenSolver<Mat4> es(symplectic_form() * sigma, false);
  std::array<double, 4> v{};
  for (int i = 0; i < 4; ++i) v[i] = std::abs(es.eigenvalues()[i].imag());
  std::sort(v.begin(), v.end());
  return {v[0], v[2]};
}

/// Bose occupation plus vacuum: 1/(e^{2 theta} - 1) + 1/2.
inline double thermal_variance(double theta) { return 1.0 / std::expm1(2.0 * theta) + 0.5; }

/// Determinant of a positive-definite matrix from its Cholesky factor. The
/// cofactor expansion loses ~1e-8 relative accuracy once entries reach ~10.
inline double spd_determinant(const Mat4& sigma) {
  const double d = Eigen::LLT<Mat4>(sigma).matrixL().toDenseMatrix().diagonal().prod();
  return d * d;
}

inline double tau(double theta) { return -std::expm1(-4.0 * theta); }

/// Gaussian distance measure evaluated with an LU inverse and the marginal
/// blocks of sigma, which the Schur construction must reproduce.
inline double distance_measure(const Mat4& sigma) {
  Mat4 tilde = Mat4::Zero();
  tilde.topLeftCorner<2, 2>() = sigma.topLeftCorner<2, 2>();
  tilde.bottomRightCorner<2, 2>() = sigma.bottomRightCorner<2, 2>();
  return 0.25 / std::sqrt(sigma.fullPivLu().determinant()) +
         0.25 / std::sqrt(tilde.fullPivLu().determinant()) -
         2.0 / std::sqrt((sigma + tilde).fullPivLu().determinant());
}

/// Random symplectic map: product of local rotations, local squeezes and a
/// two-mode squeeze, all with bounded parameters.
inline Mat4 random_symplectic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> r(-0.8, 0.8);
  auto local_squeeze = [](double a, double b) {
    Mat4 m = Mat4::Zero();
    m(0, 0) = std::exp(-a);
    m(1, 1) = std::exp(a);
    m(2, 2) = std::exp(-b);
    m(3, 3) = std::exp(b);
    return m;
  };
  auto rot = [&]() {
    return block_diag(rotation(angle(rng)), rotation(angle(rng)));
  };
  const double x = r(rng);
  const double ch = std::cosh(x);
  const double sh = std::sinh(x);
  Mat4 two_mode;
  two_mode << ch, 0, sh, 0,
      0, ch, 0, -sh,
      sh, 0, ch, 0,
      0, -sh, 0, ch;
  return rot() * local_squeeze(r(rng), r(rng)) * rot() * two_mode * rot();
}

/// Random bona fide covariance: symplectic image of a thermal product.
inline Mat4 random_bona_fide(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> nu(0.5, 2.0);
  Mat4 d = Mat4::Zero();
  const double a = nu(rng);
  const double b = nu(rng);
  d.diagonal() << a, a, b, b;
  const Mat4 s = random_symplectic(rng);
  const Mat4 out = s * d * s.transpose();
  return 0.5 * (out + out.transpose());
}

/// Random single-mode bona fide block.
inline Mat2 random_single_mode(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> nu(0.5, 2.0);
  std::uniform_real_distribution<double> r(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  Mat2 sq = Mat2::Zero();
  const double x = r(rng);
  sq(0, 0) = std::exp(-x);
  sq(1, 1) = std::exp(x);
  const Mat2 s = rotation(angle(rng)) * sq;
  const Mat2 out = nu(rng) * s * s.transpose();
  return 0.5 * (out + out.transpose());
}

}  // namespace sbs::oracle
