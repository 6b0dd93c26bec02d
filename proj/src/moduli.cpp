#include "higgsline/moduli.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace higgsline {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_k(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) throw Error(Errc::CoordinateMismatch, std::string(what) + ": genus mismatch");
}

// Wrap every imaginary part into [0, 2 pi).
Eigen::VectorXcd wrap_imag(const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    double im = v[j].imag() - kTwoPi * std::floor(v[j].imag() / kTwoPi);
    if (im >= kTwoPi) im -= kTwoPi;  // guard against floor rounding at the seam
    if (im < 0.0) im += kTwoPi;
    out[j] = {v[j].real(), im};
  }
  return out;
}

}  // namespace

BettiPoint::BettiPoint(Eigen::VectorXcd a, Eigen::VectorXcd b)
    : rhoA(std::move(a)), rhoB(std::move(b)) {
  if (rhoA.size() != rhoB.size() || rhoA.size() == 0)
    throw Error(Errc::InvalidArgument, "rhoA and rhoB must be nonempty, same length");
  for (Eigen::Index j = 0; j < rhoA.size(); ++j)
    if (rhoA[j] == std::complex<double>(0, 0) || rhoB[j] == std::complex<double>(0, 0))
      throw Error(Errc::InvalidArgument, "holonomies must be nonzero");
}

DeRhamPoint::DeRhamPoint(Eigen::VectorXcd a_, Eigen::VectorXcd b_)
    : a(std::move(a_)), b(std::move(b_)) {
  if (a.size() != b.size() || a.size() == 0)
    throw Error(Errc::InvalidArgument, "a and b must be nonempty, same length");
}

DolbeaultPoint::DolbeaultPoint(Eigen::VectorXcd q_, Eigen::VectorXcd p_)
    : q(std::move(q_)), p(std::move(p_)) {
  if (q.size() != p.size() || q.size() == 0)
    throw Error(Errc::InvalidArgument, "q and p must be nonempty, same length");
}

DeRhamPoint canonical(const DeRhamPoint& x) {
  return DeRhamPoint(wrap_imag(x.a), wrap_imag(x.b));
}

DolbeaultPoint canonical(const DolbeaultPoint& x, const PeriodMatrix& pi, double tol) {
  require_same_k(x.k(), pi.genus(), "canonical");
  return DolbeaultPoint(Lattice::dolbeault(pi).reduce(x.q, tol).rep, x.p);
}

Word surface_relator(int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "genus must be at least 1");
  Word w;
  w.reserve(4 * k);
  for (int j = 1; j <= k; ++j) {
    w.push_back({j, 1});
    w.push_back({k + j, 1});
    w.push_back({j, -1});
    w.push_back({k + j, -1});
  }
  return w;
}

std::complex<double> evaluate_word(const BettiPoint& x, const Word& w) {
  Eigen::Index k = x.k();
  std::complex<double> out(1, 0);
  for (const WordLetter& l : w) {
    if (l.generator < 1 || l.generator > 2 * k)
      throw Error(Errc::InvalidArgument,
                  "generator index " + std::to_string(l.generator) + " out of range");
    std::complex<double> g =
        l.generator <= k ? x.rhoA[l.generator - 1] : x.rhoB[l.generator - k - 1];
    // Exponents are usually +-1; keep those exact instead of exp(log).
    if (l.exponent == 1)
      out *= g;
    else if (l.exponent == -1)
      out /= g;
    else
      out *= std::pow(g, static_cast<double>(l.exponent));
  }
  return out;
}

BettiPoint holonomy(const DeRhamPoint& x) {
  return BettiPoint(x.a.array().exp().matrix(), x.b.array().exp().matrix());
}

namespace {

// log with imaginary part in [0, 2 pi).
Eigen::VectorXcd log_branch(const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    std::complex<double> l = std::log(v[j]);
    if (l.imag() < 0.0) l += std::complex<double>(0, kTwoPi);
    out[j] = l;
  }
  return out;
}

}  // namespace

DeRhamPoint log_holonomy(const BettiPoint& x) {
  return DeRhamPoint(log_branch(x.rhoA), log_branch(x.rhoB));
}

BettiDecomposition betti_decompose(const BettiPoint& x) {
  Eigen::Index k = x.k();
  Eigen::VectorXd logs(2 * k);
  Eigen::VectorXcd ua(k), ub(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    double ra = std::abs(x.rhoA[j]);
    double rb = std::abs(x.rhoB[j]);
    logs[j] = std::log(ra);
    logs[k + j] = std::log(rb);
    ua[j] = x.rhoA[j] / ra;
    ub[j] = x.rhoB[j] / rb;
  }
  return {BettiPoint(ua, ub), logs};
}

DolbeaultPoint derham_to_dolbeault(const DeRhamPoint& x, const PeriodMatrix& pi) {
  require_same_k(x.k(), pi.genus(), "derham_to_dolbeault");
  const Eigen::MatrixXd re = pi.re();
  const Eigen::MatrixXd& im_inv = pi.im_inverse();

  // Split periods: a = 2 Re(p) + 2i Im(q), b = 2(Re Pi Re p - Im Pi Im p)
  //                                          + 2i(Re Pi Im q - Im Pi Re q).
  Eigen::VectorXd im_q = x.a.imag() / 2.0;
  Eigen::VectorXd re_q = im_inv * (re * im_q - x.b.imag() / 2.0);
  Eigen::VectorXd re_p = x.a.real() / 2.0;
  Eigen::VectorXd im_p = im_inv * (re * re_p - x.b.real() / 2.0);

  Eigen::VectorXcd q(x.k()), p(x.k());
  q.real() = re_q;
  q.imag() = im_q;
  p.real() = re_p;
  p.imag() = im_p;
  return DolbeaultPoint(q, p);
}

DeRhamPoint dolbeault_to_derham(const DolbeaultPoint& x, const PeriodMatrix& pi) {
  require_same_k(x.k(), pi.genus(), "dolbeault_to_derham");
  const Eigen::MatrixXd re = pi.re();
  const Eigen::MatrixXd im = pi.im();

  Eigen::VectorXcd a(x.k()), b(x.k());
  a.real() = 2.0 * x.p.real();
  a.imag() = 2.0 * x.q.imag();
  b.real() = 2.0 * (re * x.p.real() - im * x.p.imag());
  b.imag() = 2.0 * (re * x.q.imag() - im * x.q.real());
  return DeRhamPoint(a, b);
}

BettiPoint dolbeault_to_betti(const DolbeaultPoint& x, const PeriodMatrix& pi) {
  return holonomy(dolbeault_to_derham(x, pi));
}

DolbeaultPoint betti_to_dolbeault(const BettiPoint& x, const PeriodMatrix& pi) {
  return derham_to_dolbeault(log_holonomy(x), pi);
}

Eigen::VectorXcd jacobian_coordinate(const DolbeaultPoint& x, const PeriodMatrix& pi) {
  require_same_k(x.k(), pi.genus(), "jacobian_coordinate");
  return (pi.im().cast<std::complex<double>>() * x.q) / std::numbers::pi;
}

BettiPoint group_law(const BettiPoint& x, const BettiPoint& y) {
  require_same_k(x.k(), y.k(), "group_law");
  return BettiPoint(x.rhoA.cwiseProduct(y.rhoA), x.rhoB.cwiseProduct(y.rhoB));
}

DeRhamPoint group_law(const DeRhamPoint& x, const DeRhamPoint& y) {
  require_same_k(x.k(), y.k(), "group_law");
  return DeRhamPoint(x.a + y.a, x.b + y.b);
}

DolbeaultPoint group_law(const DolbeaultPoint& x, const DolbeaultPoint& y,
                         const PeriodMatrix& pi) {
  require_same_k(x.k(), y.k(), "group_law");
  require_same_k(x.k(), pi.genus(), "group_law");
  return DolbeaultPoint(x.q + y.q, x.p + y.p);
}

BettiPoint real_structure(const BettiPoint& x, Involution which) {
  if (which == Involution::Unitary)
    return BettiPoint(x.rhoA.conjugate().cwiseInverse(), x.rhoB.conjugate().cwiseInverse());
  return BettiPoint(x.rhoA.conjugate(), x.rhoB.conjugate());
}

DeRhamPoint real_structure(const DeRhamPoint& x, Involution which) {
  if (which == Involution::Unitary)
    return DeRhamPoint(-x.a.conjugate(), -x.b.conjugate());
  return DeRhamPoint(x.a.conjugate(), x.b.conjugate());
}

DolbeaultPoint real_structure(const DolbeaultPoint& x, Involution which,
                              const PeriodMatrix& pi) {
  require_same_k(x.k(), pi.genus(), "real_structure");
  if (which == Involution::Unitary) return DolbeaultPoint(x.q, -x.p);
  return DolbeaultPoint(-x.q, x.p);
}

BettiPoint hamiltonian_flow(const BettiPoint& x, int n, double t) {
  if (n < 0) throw Error(Errc::InvalidArgument, "flow weight n must be nonnegative");
  BettiPoint out = x;
  out.rhoB[0] *= std::exp(std::complex<double>(0, n * t));
  return out;
}

Eigen::VectorXcd hitchin_map(const DolbeaultPoint& x) { return x.p; }

}  // namespace higgsline
