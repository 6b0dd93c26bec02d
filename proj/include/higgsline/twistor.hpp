#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "higgsline/error.hpp"
#include "higgsline/hyperkahler.hpp"
#include "higgsline/lattice.hpp"
#include "higgsline/quaternion.hpp"

namespace higgsline {

// The twistor space of H^k is differentiably H^k x P^1; P^1 carries the two
// stereographic charts of the sphere of complex structures (chart 1 centered
// at I, chart 2 at -I, overlapping where xi * zeta = 1). Over each chart the
// space is trivialized holomorphically; a point is stored by its chart, the
// base coordinate there, and the fiber coordinate v = (q; p) in C^{2k}.
enum class Chart { One = 1, Two = 2 };

struct TwistorPoint {
  Chart chart = Chart::One;
  std::complex<double> base;
  Eigen::VectorXcd v;  // 2k entries, blocks (q; p)

  TwistorPoint() = default;
  TwistorPoint(Chart c, std::complex<double> b, Eigen::VectorXcd v_);

  Eigen::Index k() const { return v.size() / 2; }
  Eigen::VectorXcd q() const { return v.head(k()); }
  Eigen::VectorXcd p() const { return v.tail(k()); }
};

// Value of the point in the differentiable trivialization H^k x P^1:
// chart 1: (1 - zeta K)^{-1} (q + pJ); chart 2: (xi - K)^{-1} (q + pJ).
QuaternionVector chart_map(const TwistorPoint& x);

// Inverse of chart_map: the fiber coordinate of the value m over the given
// base point. Chart 1: (1 - zeta K) m; chart 2: (xi - K) m.
TwistorPoint fiber_point(Chart chart, std::complex<double> base, const QuaternionVector& m);

// The same point in the other chart: base 1/base, fiber coordinate scaled by
// the new base coordinate. Undefined at the chart center (base = 0).
TwistorPoint transition(const TwistorPoint& x);

// Twistor lines are the constant sections of H^k x P^1; v0 = (q0; p0) is the
// fiber coordinate at zeta = 0.
struct TwistorLine {
  Eigen::VectorXcd v0;

  TwistorLine() = default;
  explicit TwistorLine(Eigen::VectorXcd v0_);

  Eigen::Index k() const { return v0.size() / 2; }
};

// Fiber coordinate of the line over a base point:
// chart 1: (q0 + i zeta conj(p0), p0 - i zeta conj(q0));
// chart 2: (xi q0 + i conj(p0), xi p0 - i conj(q0)).
TwistorPoint line_eval(const TwistorLine& l, Chart chart, std::complex<double> base);

// The unique twistor line through a point.
TwistorLine line_through(const TwistorPoint& x);

// Antiholomorphic involution covering the antipodal map: the lift that is
// the identity on the H^k factor of the product trivialization. Returns the
// image in the other chart, over base -conj(base).
TwistorPoint real_structure(const TwistorPoint& x);

// Translation by a lattice vector gamma (in C^k): adds gamma to the value's
// q-part; membership is validated against the given lattice.
TwistorPoint lattice_act(const Lattice& lattice, const Eigen::VectorXcd& gamma,
                         const TwistorPoint& x, double tol = Lattice::kCoordTol);

// The C*-action: transports the twistor line through x (scaling its Higgs
// block by lambda) and moves the base by lambda in chart-1 coordinates.
TwistorPoint cstar_act(const TwistorPoint& x, std::complex<double> lambda);

// The O(2)-valued fiberwise complex-symplectic form, evaluated on two
// tangent vectors of the fiber H^k:
// chart 1: Omega_(J,K) - 2 zeta omega_I + zeta^2 Omega_(-J,K);
// chart 2: Omega_(-J,K) - 2 xi omega_I + xi^2 Omega_(J,K).
// The two expressions glue as sections of O(2): at xi zeta = 1 the chart-2
// value is xi^2 times the chart-1 value.
std::complex<double> fiber_form(Chart chart, std::complex<double> base,
                                const TangentVector& a, const TangentVector& b);

// The same form computed from its definition as (1 + |base|^2) times the
// complex-symplectic form of the conjugated frame; cross-check of fiber_form.
std::complex<double> fiber_form_frame(Chart chart, std::complex<double> base,
                                      const TangentVector& a, const TangentVector& b);

// Maximum of |s1(zeta) - xi^{-d} s2(xi)| over the sample points (xi = 1/zeta):
// the gluing residual of a pair of scalar chart functions as a section of
// O(d), d in {-2,...,2}.
double section_glue_residual(int d, const std::function<std::complex<double>(std::complex<double>)>& s1,
                             const std::function<std::complex<double>(std::complex<double>)>& s2,
                             const std::vector<std::complex<double>>& zetas);

}  // namespace higgsline
