#pragma once

#include <complex>

#include <Eigen/Dense>

#include "higgsline/error.hpp"

namespace higgsline {

// Period matrix of a genus-k surface in a canonical homology basis:
// k x k, symmetric, with positive definite imaginary part. Validation
// happens at construction; an instance is always usable.
class PeriodMatrix {
 public:
  // Relative symmetry tolerance, scaled by the largest entry of Pi.
  static constexpr double kSymmetryTol = 1e-9;

  explicit PeriodMatrix(Eigen::MatrixXcd pi, double symmetry_tol = kSymmetryTol);

  int genus() const { return static_cast<int>(pi_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return pi_; }
  Eigen::MatrixXd re() const { return pi_.real(); }
  Eigen::MatrixXd im() const { return pi_.imag(); }

  // sqrt(2 Im Pi): the change of basis from normalized to unitary
  // coordinates. Symmetric positive definite.
  const Eigen::MatrixXd& unitary_change() const { return c_; }
  // (Im Pi)^{-1}, used by the lattice and coordinate conversions.
  const Eigen::MatrixXd& im_inverse() const { return im_inv_; }

 private:
  Eigen::MatrixXcd pi_;
  Eigen::MatrixXd c_;
  Eigen::MatrixXd im_inv_;
};

// Periods of a basis of abelian differentials: A(j,l) and B(j,l) are the
// periods of the j-th differential over the l-th A- resp. B-cycle.
struct FullPeriodMatrix {
  Eigen::MatrixXcd A, B;
};

// Periods of the unitary basis of differentials attached to Pi and a unitary
// rotation U: A = U (2 Im Pi)^{-1/2}, B = A Pi. The rows then satisfy both
// Riemann bilinear relations (A B^T symmetric, A conj(B)^T - B conj(A)^T = -iI).
FullPeriodMatrix unitary_periods(const PeriodMatrix& pi, const Eigen::MatrixXcd& u,
                                 double unitary_tol = 1e-9);

// Periods of the normalized basis (A = I, B = Pi).
FullPeriodMatrix normalized_periods(const PeriodMatrix& pi);

// Intersection pairing of two 2k-vectors of periods in block order
// (A-periods first, then B-periods): sum_j u_Aj v_Bj - u_Bj v_Aj.
std::complex<double> cup_product(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);

// The 2k-period vector of row j of a full period matrix, in block order.
Eigen::VectorXcd period_row(const FullPeriodMatrix& f, int j);

}  // namespace higgsline
