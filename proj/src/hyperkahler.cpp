#include "higgsline/hyperkahler.hpp"

#include <cmath>
#include <string>

namespace higgsline {

UnitaryCoordinates to_unitary(const DolbeaultPoint& x, const PeriodMatrix& pi) {
  if (x.k() != pi.genus())
    throw Error(Errc::CoordinateMismatch, "to_unitary: genus mismatch");
  Eigen::MatrixXcd c = pi.unitary_change().cast<std::complex<double>>();
  return {c * x.q, c * x.p};
}

DolbeaultPoint from_unitary(const UnitaryCoordinates& x, const PeriodMatrix& pi) {
  if (x.q.size() != pi.genus())
    throw Error(Errc::CoordinateMismatch, "from_unitary: genus mismatch");
  Eigen::MatrixXcd c = pi.unitary_change().cast<std::complex<double>>();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(c);
  return DolbeaultPoint(lu.solve(x.q), lu.solve(x.p));
}

double metric(const TangentVector& v1, const TangentVector& v2) {
  if (v1.size() != v2.size())
    throw Error(Errc::InvalidArgument, "metric: tangent vectors of different size");
  return v1.q.dot(v2.q).real() + v1.p.dot(v2.p).real();
}

double kahler_form(const ComplexStructure& u, const TangentVector& v1,
                   const TangentVector& v2) {
  return metric(act(u, v1), v2);
}

std::complex<double> form_pair(const Quaternion& u1, const Quaternion& u2,
                               const TangentVector& v1, const TangentVector& v2) {
  return {metric(act(u1, v1), v2), metric(act(u2, v1), v2)};
}

std::complex<double> complex_symplectic(const ComplexStructure& u,
                                        const ComplexStructure& u1,
                                        const TangentVector& v1, const TangentVector& v2,
                                        double frame_tol) {
  double dot = u.uI() * u1.uI() + u.uJ() * u1.uJ() + u.uK() * u1.uK();
  if (std::abs(dot) > frame_tol)
    throw Error(Errc::FrameNotOrthonormal,
                "u . u1 = " + std::to_string(dot) + "; frame must be orthonormal");
  Quaternion u2 = cross(u.quaternion(), u1.quaternion());
  return form_pair(u1.quaternion(), u2, v1, v2);
}

std::complex<double> cotangent_form(const TangentVector& v1, const TangentVector& v2) {
  return (v1.q.transpose() * v2.p).value() - (v2.q.transpose() * v1.p).value();
}

Eigen::MatrixXd jpi_matrix(const PeriodMatrix& pi) {
  int k = pi.genus();
  const Eigen::MatrixXd re = pi.re();
  const Eigen::MatrixXd im = pi.im();
  const Eigen::MatrixXd& im_inv = pi.im_inverse();

  Eigen::MatrixXd j(2 * k, 2 * k);
  j.topLeftCorner(k, k) = -im_inv * re;
  j.topRightCorner(k, k) = im_inv;
  j.bottomLeftCorner(k, k) = -re * im_inv * re - im;
  j.bottomRightCorner(k, k) = re * im_inv;
  return j;
}

Eigen::VectorXd log_periods(const Eigen::VectorXcd& p, const PeriodMatrix& pi) {
  int k = pi.genus();
  if (p.size() != k) throw Error(Errc::CoordinateMismatch, "log_periods: genus mismatch");
  Eigen::VectorXd ab(2 * k);
  ab.head(k) = p.real();
  ab.tail(k) = pi.re() * p.real() - pi.im() * p.imag();
  return ab;
}

Eigen::VectorXcd p_from_log_periods(const Eigen::VectorXd& ab, const PeriodMatrix& pi) {
  int k = pi.genus();
  if (ab.size() != 2 * k)
    throw Error(Errc::CoordinateMismatch, "p_from_log_periods: expected a 2k-vector");
  Eigen::VectorXcd p(k);
  p.real() = ab.head(k);
  p.imag() = pi.im_inverse() * (pi.re() * ab.head(k) - ab.tail(k));
  return p;
}

namespace {

void require_nonzero(std::complex<double> lambda) {
  if (lambda == std::complex<double>(0, 0))
    throw Error(Errc::InvalidArgument, "lambda must be a nonzero complex number");
}

}  // namespace

Eigen::VectorXd cstar_act_periods(const PeriodMatrix& pi, std::complex<double> lambda,
                                  const Eigen::VectorXd& ab) {
  require_nonzero(lambda);
  int k = pi.genus();
  if (ab.size() != 2 * k)
    throw Error(Errc::CoordinateMismatch, "cstar_act_periods: expected a 2k-vector");
  return lambda.real() * ab + lambda.imag() * (jpi_matrix(pi) * ab);
}

DolbeaultPoint cstar_act(const DolbeaultPoint& x, std::complex<double> lambda) {
  require_nonzero(lambda);
  return DolbeaultPoint(x.q, lambda * x.p);
}

BettiPoint cstar_act(const BettiPoint& x, std::complex<double> lambda,
                     const PeriodMatrix& pi) {
  require_nonzero(lambda);
  if (x.k() != pi.genus()) throw Error(Errc::CoordinateMismatch, "cstar_act: genus mismatch");
  BettiDecomposition d = betti_decompose(x);
  Eigen::VectorXd logs = cstar_act_periods(pi, lambda, d.log_radii);
  Eigen::Index k = x.k();
  Eigen::VectorXcd ra(k), rb(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    ra[j] = d.unitary.rhoA[j] * std::exp(logs[j]);
    rb[j] = d.unitary.rhoB[j] * std::exp(logs[k + j]);
  }
  return BettiPoint(ra, rb);
}

DeRhamPoint cstar_act(const DeRhamPoint& x, std::complex<double> lambda,
                      const PeriodMatrix& pi) {
  require_nonzero(lambda);
  if (x.k() != pi.genus()) throw Error(Errc::CoordinateMismatch, "cstar_act: genus mismatch");
  Eigen::Index k = x.k();
  // The action fixes the imaginary parts (the unitary holonomy part) and
  // transports the real parts, which are twice the log-periods of p.
  Eigen::VectorXd re(2 * k);
  re.head(k) = x.a.real();
  re.tail(k) = x.b.real();
  re = cstar_act_periods(pi, lambda, re);
  Eigen::VectorXcd a = x.a, b = x.b;
  a.real() = re.head(k);
  b.real() = re.tail(k);
  return DeRhamPoint(a, b);
}

double energy(const UnitaryCoordinates& x) { return 0.5 * x.p.squaredNorm(); }

double energy(const DolbeaultPoint& x, const PeriodMatrix& pi) {
  if (x.k() != pi.genus()) throw Error(Errc::CoordinateMismatch, "energy: genus mismatch");
  return 0.5 * (pi.unitary_change().cast<std::complex<double>>() * x.p).squaredNorm();
}

DolbeaultPoint gradient_flow(const DolbeaultPoint& x, double t) {
  return DolbeaultPoint(x.q, std::exp(-t) * x.p);
}

UnitaryCoordinates gradient_flow(const UnitaryCoordinates& x, double t) {
  return {x.q, std::exp(-t) * x.p};
}

DolbeaultPoint circle_act(const DolbeaultPoint& x, double theta) {
  return DolbeaultPoint(x.q, std::exp(std::complex<double>(0, theta)) * x.p);
}

UnitaryCoordinates circle_act(const UnitaryCoordinates& x, double theta) {
  return {x.q, std::exp(std::complex<double>(0, theta)) * x.p};
}

int quaternionization_rank(const ComplexStructure& u, int k, double rel_threshold) {
  if (k < 1) throw Error(Errc::InvalidArgument, "genus must be at least 1");
  // Real basis of C (x)_R V: {1 (x) e_j, 1 (x) ie_j, i (x) e_j, i (x) ie_j}.
  // 1 (x) v maps to v, i (x) v maps to u v.
  Eigen::MatrixXd m(4 * k, 4 * k);
  int col = 0;
  for (int tensor_i : {0, 1}) {
    for (int j = 0; j < k; ++j) {
      for (int imag : {0, 1}) {
        Eigen::VectorXcd vq = Eigen::VectorXcd::Zero(k);
        vq[j] = imag ? std::complex<double>(0, 1) : std::complex<double>(1, 0);
        QuaternionVector v(vq, Eigen::VectorXcd::Zero(k));
        m.col(col++) = to_real(tensor_i ? act(u, v) : v);
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  double cutoff = rel_threshold * s[0];
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > cutoff) ++rank;
  return rank;
}

double potential_phi(const QuaternionVector& v) { return 0.5 * v.p.squaredNorm(); }

double potential_rho(const QuaternionVector& v) {
  return 0.5 * (v.q.squaredNorm() + v.p.squaredNorm());
}

double potential_psi(const QuaternionVector& v) {
  return v.q.squaredNorm() - v.p.squaredNorm();
}

namespace {

// Matrix of the action of u on the real 4k coordinates.
Eigen::MatrixXd real_action_matrix(const ComplexStructure& u, Eigen::Index k) {
  Eigen::MatrixXd m(4 * k, 4 * k);
  for (Eigen::Index n = 0; n < 4 * k; ++n) {
    Eigen::VectorXd e = Eigen::VectorXd::Unit(4 * k, n);
    m.col(n) = to_real(act(u, from_real(e)));
  }
  return m;
}

// d(df o u) on every coordinate 2-plane by nested central differences.
Eigen::MatrixXd exterior_derivative_fd(const ComplexStructure& u, const ScalarField& f,
                                       const Eigen::VectorXd& w0, double h) {
  const Eigen::Index n = w0.size();
  const Eigen::MatrixXd umat = real_action_matrix(u, n / 4);

  // c(w, j) = df_w(u e_j), itself a central difference.
  auto c = [&](const Eigen::VectorXd& w, Eigen::Index j) {
    Eigen::VectorXd d = umat.col(j);
    return (f(from_real(w + h * d)) - f(from_real(w - h * d))) / (2.0 * h);
  };

  Eigen::MatrixXd dd = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    Eigen::VectorXd em = Eigen::VectorXd::Unit(n, m);
    for (Eigen::Index j = m + 1; j < n; ++j) {
      Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      double v = (c(w0 + h * em, j) - c(w0 - h * em, j) - c(w0 + h * ej, m) +
                  c(w0 - h * ej, m)) /
                 (2.0 * h);
      dd(m, j) = v;
      dd(j, m) = -v;
    }
  }
  return dd;
}

Eigen::MatrixXd omega_matrix(const ComplexStructure& u, Eigen::Index n) {
  Eigen::MatrixXd w(n, n);
  for (Eigen::Index m = 0; m < n; ++m)
    for (Eigen::Index j = 0; j < n; ++j)
      w(m, j) = kahler_form(u, from_real(Eigen::VectorXd::Unit(n, m)),
                            from_real(Eigen::VectorXd::Unit(n, j)));
  return w;
}

}  // namespace

double potential_residual(const ComplexStructure& u, const ScalarField& f,
                          const QuaternionVector& at, double h, PotentialClaim claim) {
  if (h <= 0) throw Error(Errc::InvalidArgument, "finite-difference step must be positive");
  Eigen::VectorXd w0 = to_real(at);
  Eigen::MatrixXd dd = exterior_derivative_fd(u, f, w0, h);
  if (claim == PotentialClaim::Pluriharmonic) return dd.cwiseAbs().maxCoeff();
  Eigen::MatrixXd target = omega_matrix(u, w0.size());
  return (-0.5 * dd - target).cwiseAbs().maxCoeff();
}

double potential_scale(const ComplexStructure& u, const ScalarField& f,
                       const QuaternionVector& at, double h) {
  if (h <= 0) throw Error(Errc::InvalidArgument, "finite-difference step must be positive");
  Eigen::VectorXd w0 = to_real(at);
  Eigen::MatrixXd fd = -0.5 * exterior_derivative_fd(u, f, w0, h);
  Eigen::MatrixXd target = omega_matrix(u, w0.size());
  double num = (fd.array() * target.array()).sum();
  double den = target.array().square().sum();
  if (den == 0.0) throw Error(Errc::InvalidArgument, "omega_u vanishes on the sample");
  return num / den;
}

}  // namespace higgsline
