#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "higgsline/period_matrix.hpp"
#include "higgsline/quaternion.hpp"

namespace higgsline {

// Deterministic sample generator for tests and verification suites.  Every
// draw goes through the one engine so a (seed, call sequence) pair pins the
// whole run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  std::complex<double> cnormal() { return {normal(), normal()}; }

  Eigen::VectorXcd cvector(int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v[i] = cnormal();
    return v;
  }

  Eigen::VectorXd rvector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  QuaternionVector tangent(int k) { return {cvector(k), cvector(k)}; }

  // Uniform on the unit sphere of imaginary quaternions.
  ComplexStructure complex_structure() {
    double x = normal(), y = normal(), z = normal();
    double n = std::sqrt(x * x + y * y + z * z);
    while (n < 1e-6) {
      x = normal();
      y = normal();
      z = normal();
      n = std::sqrt(x * x + y * y + z * z);
    }
    return ComplexStructure(x / n, y / n, z / n);
  }

  Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }

  // Haar-ish unitary via QR of a complex Gaussian matrix.
  Eigen::MatrixXcd unitary(int n) {
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = cnormal();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
      std::complex<double> d = r(j, j);
      double a = std::abs(d);
      q.col(j) *= a > 0 ? d / a : 1.0;
    }
    return q;
  }

  // Symmetric with positive definite imaginary part, conditioned away from
  // degeneracy so residuals stay meaningful.
  PeriodMatrix period_matrix(int k) {
    Eigen::MatrixXd re(k, k), m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        re(i, j) = normal();
        m(i, j) = normal();
      }
    re = ((re + re.transpose()) / 2.0).eval();
    Eigen::MatrixXd im = m.transpose() * m + Eigen::MatrixXd::Identity(k, k) * 0.5;
    Eigen::MatrixXcd pi = re.cast<std::complex<double>>();
    pi += std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
    return PeriodMatrix(std::move(pi));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace higgsline
