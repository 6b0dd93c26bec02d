#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "higgsline/error.hpp"

namespace higgsline {

using Complex = std::complex<double>;

// Quaternion w + xI + yJ + zK. The complex numbers sit inside as w + xI, so
// every quaternion is also a pair (a, b) = (w + ix, y + iz) with the product
//   (a1 + b1 J)(a2 + b2 J) = (a1 a2 - b1 conj(b2)) + (a1 b2 + b1 conj(a2)) J,
// a consequence of the commutation rule J z = conj(z) J.
struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  static Quaternion from_complex(Complex a) { return {a.real(), a.imag(), 0, 0}; }
  static Quaternion from_complex_pair(Complex a, Complex b) {
    return {a.real(), a.imag(), b.real(), b.imag()};
  }

  // The pair (a, b) with this = a + bJ.
  std::pair<Complex, Complex> complex_pair() const {
    return {Complex(w, x), Complex(y, z)};
  }

  double norm_squared() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_squared()); }
};

inline Quaternion operator+(const Quaternion& l, const Quaternion& r) {
  return {l.w + r.w, l.x + r.x, l.y + r.y, l.z + r.z};
}

inline Quaternion operator-(const Quaternion& l, const Quaternion& r) {
  return {l.w - r.w, l.x - r.x, l.y - r.y, l.z - r.z};
}

inline Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }

inline Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

inline Quaternion operator*(const Quaternion& l, const Quaternion& r) {
  return {l.w * r.w - l.x * r.x - l.y * r.y - l.z * r.z,
          l.w * r.x + l.x * r.w + l.y * r.z - l.z * r.y,
          l.w * r.y - l.x * r.z + l.y * r.w + l.z * r.x,
          l.w * r.z + l.x * r.y - l.y * r.x + l.z * r.w};
}

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline Quaternion inverse(const Quaternion& q) {
  double n2 = q.norm_squared();
  if (n2 == 0.0) throw Error(Errc::InvalidArgument, "cannot invert the zero quaternion");
  return (1.0 / n2) * conj(q);
}

// Conjugation g h g^{-1}; the rotation of the imaginary 3-space induced by g.
inline Quaternion conjugate_by(const Quaternion& g, const Quaternion& h) {
  return g * h * inverse(g);
}

// Imaginary part of the product: the cross product on pure imaginary
// quaternions, (1/2)(ab - ba).
inline Quaternion cross(const Quaternion& a, const Quaternion& b) {
  Quaternion p = a * b;
  Quaternion q = b * a;
  return 0.5 * (p - q);
}

// Element of H^k written q + pJ with q, p in C^k. Scalars act on the left
// throughout, so J(q + pJ) = -conj(p) + conj(q) J.
struct QuaternionVector {
  Eigen::VectorXcd q, p;

  QuaternionVector() = default;
  QuaternionVector(Eigen::VectorXcd q_, Eigen::VectorXcd p_)
      : q(std::move(q_)), p(std::move(p_)) {
    if (q.size() != p.size())
      throw Error(Errc::InvalidArgument, "q and p must have the same length");
  }

  static QuaternionVector zero(Eigen::Index k) {
    return {Eigen::VectorXcd::Zero(k), Eigen::VectorXcd::Zero(k)};
  }

  Eigen::Index size() const { return q.size(); }

  double norm() const { return std::sqrt(q.squaredNorm() + p.squaredNorm()); }
};

inline QuaternionVector operator+(const QuaternionVector& l, const QuaternionVector& r) {
  return {l.q + r.q, l.p + r.p};
}

inline QuaternionVector operator-(const QuaternionVector& l, const QuaternionVector& r) {
  return {l.q - r.q, l.p - r.p};
}

// Left action of a quaternion scalar on H^k.
inline QuaternionVector act(const Quaternion& u, const QuaternionVector& v) {
  auto [a, b] = u.complex_pair();
  return {a * v.q - b * v.p.conjugate(), a * v.p + b * v.q.conjugate()};
}

// Real coordinates [Re q; Im q; Re p; Im p] of a vector in H^k.
inline Eigen::VectorXd to_real(const QuaternionVector& v) {
  Eigen::Index k = v.size();
  Eigen::VectorXd w(4 * k);
  w.segment(0, k) = v.q.real();
  w.segment(k, k) = v.q.imag();
  w.segment(2 * k, k) = v.p.real();
  w.segment(3 * k, k) = v.p.imag();
  return w;
}

inline QuaternionVector from_real(const Eigen::VectorXd& w) {
  if (w.size() % 4 != 0)
    throw Error(Errc::InvalidArgument, "real coordinate vector length must be 4k");
  Eigen::Index k = w.size() / 4;
  Eigen::VectorXcd q(k), p(k);
  q.real() = w.segment(0, k);
  q.imag() = w.segment(k, k);
  p.real() = w.segment(2 * k, k);
  p.imag() = w.segment(3 * k, k);
  return {q, p};
}

// A point u_I I + u_J J + u_K K of the unit sphere of complex structures.
// Constructors accept a norm defect up to `tol` and renormalize.
class ComplexStructure {
 public:
  static constexpr double kUnitTol = 1e-9;

  ComplexStructure(double uI, double uJ, double uK, double tol = kUnitTol)
      : uI_(uI), uJ_(uJ), uK_(uK) {
    double n = std::sqrt(uI_ * uI_ + uJ_ * uJ_ + uK_ * uK_);
    if (std::abs(n - 1.0) > tol)
      throw Error(Errc::InvalidArgument, "not a unit vector: |u| = " + std::to_string(n));
    uI_ /= n;
    uJ_ /= n;
    uK_ /= n;
  }

  static ComplexStructure from_quaternion(const Quaternion& u, double tol = kUnitTol) {
    if (std::abs(u.w) > tol)
      throw Error(Errc::InvalidArgument, "complex structure must be purely imaginary");
    return ComplexStructure(u.x, u.y, u.z, tol);
  }

  static ComplexStructure I() { return ComplexStructure(1, 0, 0); }
  static ComplexStructure J() { return ComplexStructure(0, 1, 0); }
  static ComplexStructure K() { return ComplexStructure(0, 0, 1); }

  double uI() const { return uI_; }
  double uJ() const { return uJ_; }
  double uK() const { return uK_; }

  Quaternion quaternion() const { return {0, uI_, uJ_, uK_}; }

 private:
  double uI_, uJ_, uK_;
};

inline ComplexStructure antipode(const ComplexStructure& u) {
  return ComplexStructure(-u.uI(), -u.uJ(), -u.uK());
}

inline QuaternionVector act(const ComplexStructure& u, const QuaternionVector& v) {
  return act(u.quaternion(), v);
}

// Stereographic charts on the sphere of complex structures. Chart 1 is
// centered at I (zeta = 0 there) and chart 2 at -I; they overlap where
// xi * zeta = 1. Closed forms of the conjugations below.
inline ComplexStructure stereo_chart1(Complex zeta) {
  double n2 = std::norm(zeta);
  double d = 1.0 + n2;
  return ComplexStructure((1.0 - n2) / d, 2.0 * zeta.real() / d, 2.0 * zeta.imag() / d);
}

inline ComplexStructure stereo_chart2(Complex xi) {
  double n2 = std::norm(xi);
  double d = 1.0 + n2;
  return ComplexStructure(-(1.0 - n2) / d, 2.0 * xi.real() / d, -2.0 * xi.imag() / d);
}

// The same charts computed as actual quaternion conjugations
// (1 + zeta K) I (1 + zeta K)^{-1} resp. (conj(xi) + K) I (conj(xi) + K)^{-1},
// with zeta embedded as Re(zeta) + Im(zeta) I. Used to cross-check the
// closed forms.
inline ComplexStructure stereo_chart1_conjugation(Complex zeta) {
  // zeta K = Re(zeta) K + Im(zeta) IK = -Im(zeta) J + Re(zeta) K.
  Quaternion g{1, 0, -zeta.imag(), zeta.real()};
  return ComplexStructure::from_quaternion(conjugate_by(g, Quaternion::i()));
}

inline ComplexStructure stereo_chart2_conjugation(Complex xi) {
  Quaternion g = Quaternion::from_complex(std::conj(xi)) + Quaternion::k();
  return ComplexStructure::from_quaternion(conjugate_by(g, Quaternion::i()));
}

// Antipodal map expressed in chart coordinates: within one chart it is
// zeta -> -1/conj(zeta); from one chart to the other it is zeta -> -conj(zeta).
inline Complex antipode_in_chart(Complex zeta) {
  if (zeta == Complex(0, 0))
    throw Error(Errc::InvalidArgument, "antipode of the chart center lies outside the chart");
  return -1.0 / std::conj(zeta);
}

inline Complex antipode_to_other_chart(Complex zeta) { return -std::conj(zeta); }

}  // namespace higgsline
