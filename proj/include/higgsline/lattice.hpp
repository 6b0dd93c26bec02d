#pragma once

#include <vector>

#include <Eigen/Dense>

#include "higgsline/error.hpp"
#include "higgsline/period_matrix.hpp"

namespace higgsline {

// A point of the quotient torus C^k / L: the canonical representative
// together with the integer lattice coordinates that were subtracted,
// so v = rep + basis * n.
struct JacobianPoint {
  Eigen::VectorXcd rep;
  Eigen::VectorXi n;
};

// Full-rank lattice in C^k spanned over Z by 2k complex basis vectors
// (the columns of a k x 2k matrix).
class Lattice {
 public:
  // Absolute tolerance on lattice coordinates for membership and reduction.
  static constexpr double kCoordTol = 1e-9;
  // two_torsion enumerates 4^k points; refuse genus beyond this.
  static constexpr int kMaxTwoTorsionGenus = 12;

  explicit Lattice(Eigen::MatrixXcd basis);

  // Z^k + Pi Z^k, the period lattice of the normalized differential basis.
  static Lattice periods(const PeriodMatrix& pi);
  // pi (Im Pi)^{-1} (Z^k + Pi Z^k), the lattice of the Dolbeault
  // q-coordinate.
  static Lattice dolbeault(const PeriodMatrix& pi);

  int k() const { return static_cast<int>(basis_.rows()); }
  const Eigen::MatrixXcd& basis() const { return basis_; }

  // Real lattice coordinates t with v = basis * t.
  Eigen::VectorXd coordinates(const Eigen::VectorXcd& v) const;

  bool contains(const Eigen::VectorXcd& v, double tol = kCoordTol) const;

  // Canonical representative: subtract the integer part of the lattice
  // coordinates, normalizing coordinates within tol below an integer up to
  // that integer. Resulting coordinates lie in [0, 1) up to tol.
  JacobianPoint reduce(const Eigen::VectorXcd& v, double tol = kCoordTol) const;

  // The 4^k classes of (1/2)L / L, reduced representatives in enumeration
  // order of the binary digits of the half-basis coefficients.
  std::vector<JacobianPoint> two_torsion(double tol = kCoordTol) const;

 private:
  Eigen::MatrixXcd basis_;       // k x 2k
  Eigen::MatrixXd real_basis_;   // 2k x 2k, rows [Re; Im]
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

}  // namespace higgsline
