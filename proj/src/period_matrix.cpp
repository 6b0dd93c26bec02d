#include "higgsline/period_matrix.hpp"

#include <cmath>
#include <string>

namespace higgsline {

namespace {

// Cholesky with explicit pivots, so a failure can report which leading minor
// went nonpositive. Eigen's LLT signals failure but not the pivot.
bool cholesky_positive_definite(const Eigen::MatrixXd& m, int* bad_pivot) {
  Eigen::Index n = m.rows();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = m(j, j) - l.row(j).head(j).squaredNorm();
    if (!(d > 0.0) || !std::isfinite(d)) {
      if (bad_pivot) *bad_pivot = static_cast<int>(j);
      return false;
    }
    l(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = m(i, j) - (l.row(i).head(j) * l.row(j).head(j).transpose()).value();
      l(i, j) = s / l(j, j);
    }
  }
  return true;
}

Eigen::MatrixXd symmetric_sqrt(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

PeriodMatrix::PeriodMatrix(Eigen::MatrixXcd pi, double symmetry_tol) : pi_(std::move(pi)) {
  if (pi_.rows() == 0 || pi_.rows() != pi_.cols())
    throw Error(Errc::InvalidArgument, "period matrix must be square and nonempty");

  double scale = std::max(1.0, pi_.cwiseAbs().maxCoeff());
  double asym = (pi_ - pi_.transpose()).cwiseAbs().maxCoeff();
  if (asym > symmetry_tol * scale)
    throw Error(Errc::NotSymmetric,
                "max |Pi - Pi^T| = " + std::to_string(asym) + " exceeds tolerance");

  Eigen::MatrixXd im = pi_.imag();
  int pivot = -1;
  if (!cholesky_positive_definite(im, &pivot))
    throw Error(Errc::ImNotPositiveDefinite,
                "Cholesky pivot " + std::to_string(pivot) + " of Im Pi is not positive");

  c_ = symmetric_sqrt(2.0 * im);
  im_inv_ = im.llt().solve(Eigen::MatrixXd::Identity(im.rows(), im.cols()));
}

FullPeriodMatrix unitary_periods(const PeriodMatrix& pi, const Eigen::MatrixXcd& u,
                                 double unitary_tol) {
  int k = pi.genus();
  if (u.rows() != k || u.cols() != k)
    throw Error(Errc::InvalidArgument, "U must be k x k");
  double defect =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(k, k)).cwiseAbs().maxCoeff();
  if (defect > unitary_tol)
    throw Error(Errc::InvalidArgument,
                "U is not unitary: max |U*U - I| = " + std::to_string(defect));

  // C = sqrt(2 Im Pi) is symmetric positive definite, so solving on the right
  // realizes U C^{-1} without forming the inverse.
  Eigen::MatrixXcd a =
      pi.unitary_change().cast<std::complex<double>>().ldlt().solve(u.transpose()).transpose();
  return {a, a * pi.matrix()};
}

FullPeriodMatrix normalized_periods(const PeriodMatrix& pi) {
  int k = pi.genus();
  return {Eigen::MatrixXcd::Identity(k, k), pi.matrix()};
}

std::complex<double> cup_product(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw Error(Errc::InvalidArgument, "period vectors must share an even length");
  Eigen::Index k = u.size() / 2;
  // Plain bilinear pairing, no conjugation (VectorXcd::dot would conjugate).
  return (u.head(k).transpose() * v.tail(k)).value() -
         (u.tail(k).transpose() * v.head(k)).value();
}

Eigen::VectorXcd period_row(const FullPeriodMatrix& f, int j) {
  Eigen::Index k = f.A.cols();
  Eigen::VectorXcd r(2 * k);
  r.head(k) = f.A.row(j).transpose();
  r.tail(k) = f.B.row(j).transpose();
  return r;
}

}  // namespace higgsline
