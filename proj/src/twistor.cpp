#include "higgsline/twistor.hpp"

#include <cmath>
#include <string>

namespace higgsline {

namespace {

using C = std::complex<double>;

QuaternionVector split(const Eigen::VectorXcd& v) {
  Eigen::Index k = v.size() / 2;
  return {v.head(k), v.tail(k)};
}

Eigen::VectorXcd join(const QuaternionVector& m) {
  Eigen::VectorXcd v(2 * m.size());
  v.head(m.size()) = m.q;
  v.tail(m.size()) = m.p;
  return v;
}

// Left multiplication by 1 - zeta K resp. xi - K on H^k. K acts by
// (q, p) -> (-i conj(p), i conj(q)).
QuaternionVector one_minus_zeta_k(C zeta, const QuaternionVector& m) {
  Quaternion zk = Quaternion::from_complex(zeta) * Quaternion::k();
  return m - act(zk, m);
}

QuaternionVector xi_minus_k(C xi, const QuaternionVector& m) {
  return act(Quaternion::from_complex(xi), m) - act(Quaternion::k(), m);
}

}  // namespace

TwistorPoint::TwistorPoint(Chart c, C b, Eigen::VectorXcd v_)
    : chart(c), base(b), v(std::move(v_)) {
  if (v.size() == 0 || v.size() % 2 != 0)
    throw Error(Errc::InvalidArgument, "fiber coordinate must have even positive length");
}

QuaternionVector chart_map(const TwistorPoint& x) {
  QuaternionVector vv = split(x.v);
  if (x.chart == Chart::One) {
    // (1 - zeta K)^{-1} = (1 + zeta K) / (1 + |zeta|^2).
    Quaternion zk = Quaternion::from_complex(x.base) * Quaternion::k();
    QuaternionVector w = vv + act(zk, vv);
    double s = 1.0 / (1.0 + std::norm(x.base));
    return {s * w.q, s * w.p};
  }
  // (xi - K)^{-1} = (conj(xi) + K) / (1 + |xi|^2).
  Quaternion g = Quaternion::from_complex(std::conj(x.base)) + Quaternion::k();
  QuaternionVector w = act(g, vv);
  double s = 1.0 / (1.0 + std::norm(x.base));
  return {s * w.q, s * w.p};
}

TwistorPoint fiber_point(Chart chart, C base, const QuaternionVector& m) {
  QuaternionVector v =
      chart == Chart::One ? one_minus_zeta_k(base, m) : xi_minus_k(base, m);
  return TwistorPoint(chart, base, join(v));
}

TwistorPoint transition(const TwistorPoint& x) {
  if (x.base == C(0, 0))
    throw Error(Errc::InvalidArgument, "chart center is not covered by the other chart");
  C other = 1.0 / x.base;
  Chart c = x.chart == Chart::One ? Chart::Two : Chart::One;
  // f1_zeta(v) = f2_xi(xi v) and symmetrically; the fiber coordinate picks up
  // the new base coordinate as a factor.
  return TwistorPoint(c, other, other * x.v);
}

TwistorLine::TwistorLine(Eigen::VectorXcd v0_) : v0(std::move(v0_)) {
  if (v0.size() == 0 || v0.size() % 2 != 0)
    throw Error(Errc::InvalidArgument, "line coordinate must have even positive length");
}

TwistorPoint line_eval(const TwistorLine& l, Chart chart, C base) {
  return fiber_point(chart, base, split(l.v0));
}

TwistorLine line_through(const TwistorPoint& x) { return TwistorLine(join(chart_map(x))); }

TwistorPoint real_structure(const TwistorPoint& x) {
  QuaternionVector m = chart_map(x);
  Chart c = x.chart == Chart::One ? Chart::Two : Chart::One;
  return fiber_point(c, -std::conj(x.base), m);
}

TwistorPoint lattice_act(const Lattice& lattice, const Eigen::VectorXcd& gamma,
                         const TwistorPoint& x, double tol) {
  if (gamma.size() != x.k())
    throw Error(Errc::CoordinateMismatch, "lattice_act: genus mismatch");
  if (!lattice.contains(gamma, tol))
    throw Error(Errc::NotLatticeVector, "gamma is not a lattice vector");
  QuaternionVector m = chart_map(x);
  m.q += gamma;
  return fiber_point(x.chart, x.base, m);
}

TwistorPoint cstar_act(const TwistorPoint& x, C lambda) {
  if (lambda == C(0, 0))
    throw Error(Errc::InvalidArgument, "lambda must be a nonzero complex number");
  TwistorLine l = line_through(x);
  Eigen::Index k = x.k();
  Eigen::VectorXcd v0(2 * k);
  v0.head(k) = l.v0.head(k);
  v0.tail(k) = lambda * l.v0.tail(k);
  // The base moves by multiplication with lambda in chart-1 coordinates,
  // i.e. by 1/lambda in chart 2.
  C base = x.chart == Chart::One ? lambda * x.base : x.base / lambda;
  return line_eval(TwistorLine(v0), x.chart, base);
}

std::complex<double> fiber_form(Chart chart, C base, const TangentVector& a,
                                const TangentVector& b) {
  if (a.size() != b.size())
    throw Error(Errc::InvalidArgument, "fiber_form: tangent vectors of different size");
  C jk = form_pair(Quaternion::j(), Quaternion::k(), a, b);
  C mjk = form_pair(-Quaternion::j(), Quaternion::k(), a, b);
  double wi = metric(act(Quaternion::i(), a), b);
  if (chart == Chart::One) return jk - 2.0 * base * wi + base * base * mjk;
  return mjk - 2.0 * base * wi + base * base * jk;
}

std::complex<double> fiber_form_frame(Chart chart, C base, const TangentVector& a,
                                      const TangentVector& b) {
  if (a.size() != b.size())
    throw Error(Errc::InvalidArgument, "fiber_form_frame: tangent vectors of different size");
  Quaternion g = chart == Chart::One
                     ? Quaternion::one() + Quaternion::from_complex(base) * Quaternion::k()
                     : Quaternion::from_complex(std::conj(base)) + Quaternion::k();
  Quaternion j = conjugate_by(g, Quaternion::j());
  Quaternion k = conjugate_by(g, Quaternion::k());
  return (1.0 + std::norm(base)) * form_pair(j, k, a, b);
}

double section_glue_residual(int d, const std::function<C(C)>& s1,
                             const std::function<C(C)>& s2, const std::vector<C>& zetas) {
  if (d < -2 || d > 2)
    throw Error(Errc::InvalidArgument, "section degree must lie in {-2,...,2}");
  double worst = 0.0;
  for (C zeta : zetas) {
    if (zeta == C(0, 0))
      throw Error(Errc::InvalidArgument, "sample points must avoid the chart center");
    C xi = 1.0 / zeta;
    worst = std::max(worst, std::abs(s1(zeta) - std::pow(xi, -d) * s2(xi)));
  }
  return worst;
}

}  // namespace higgsline
