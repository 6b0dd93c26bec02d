#include "higgsline/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace higgsline {

Lattice::Lattice(Eigen::MatrixXcd basis) : basis_(std::move(basis)) {
  Eigen::Index k = basis_.rows();
  if (k == 0 || basis_.cols() != 2 * k)
    throw Error(Errc::InvalidArgument, "lattice basis must be k x 2k");

  real_basis_.resize(2 * k, 2 * k);
  real_basis_.topRows(k) = basis_.real();
  real_basis_.bottomRows(k) = basis_.imag();

  Eigen::FullPivLU<Eigen::MatrixXd> rank_check(real_basis_);
  if (!rank_check.isInvertible())
    throw Error(Errc::SingularLattice,
                "basis spans a real subspace of rank " + std::to_string(rank_check.rank()) +
                    " < " + std::to_string(2 * k));
  lu_ = Eigen::PartialPivLU<Eigen::MatrixXd>(real_basis_);
}

Lattice Lattice::periods(const PeriodMatrix& pi) {
  int k = pi.genus();
  Eigen::MatrixXcd b(k, 2 * k);
  b.leftCols(k) = Eigen::MatrixXcd::Identity(k, k);
  b.rightCols(k) = pi.matrix();
  return Lattice(std::move(b));
}

Lattice Lattice::dolbeault(const PeriodMatrix& pi) {
  int k = pi.genus();
  Eigen::MatrixXcd scale = std::numbers::pi * pi.im_inverse().cast<std::complex<double>>();
  Eigen::MatrixXcd b(k, 2 * k);
  b.leftCols(k) = scale;
  b.rightCols(k) = scale * pi.matrix();
  return Lattice(std::move(b));
}

Eigen::VectorXd Lattice::coordinates(const Eigen::VectorXcd& v) const {
  Eigen::Index k = basis_.rows();
  if (v.size() != k)
    throw Error(Errc::InvalidArgument, "vector length does not match the lattice rank");
  Eigen::VectorXd rhs(2 * k);
  rhs.head(k) = v.real();
  rhs.tail(k) = v.imag();
  return lu_.solve(rhs);
}

bool Lattice::contains(const Eigen::VectorXcd& v, double tol) const {
  Eigen::VectorXd t = coordinates(v);
  for (Eigen::Index j = 0; j < t.size(); ++j)
    if (std::abs(t[j] - std::round(t[j])) > tol) return false;
  return true;
}

JacobianPoint Lattice::reduce(const Eigen::VectorXcd& v, double tol) const {
  Eigen::VectorXd t = coordinates(v);
  Eigen::VectorXi n(t.size());
  for (Eigen::Index j = 0; j < t.size(); ++j) {
    double fl = std::floor(t[j]);
    if (t[j] - fl >= 1.0 - tol) fl += 1.0;  // wrap values just below an integer
    n[j] = static_cast<int>(fl);
  }
  Eigen::VectorXcd rep = v - basis_ * n.cast<std::complex<double>>();
  return {rep, n};
}

std::vector<JacobianPoint> Lattice::two_torsion(double tol) const {
  int k = this->k();
  if (k > kMaxTwoTorsionGenus)
    throw Error(Errc::GenusTooLarge,
                "two-torsion enumeration is 4^k points; refusing k = " + std::to_string(k));
  std::vector<JacobianPoint> points;
  points.reserve(std::size_t(1) << (2 * k));
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << (2 * k)); ++bits) {
    Eigen::VectorXd half = Eigen::VectorXd::Zero(2 * k);
    for (int j = 0; j < 2 * k; ++j)
      if (bits & (std::uint64_t(1) << j)) half[j] = 0.5;
    points.push_back(reduce(basis_ * half.cast<std::complex<double>>(), tol));
  }
  return points;
}

}  // namespace higgsline
