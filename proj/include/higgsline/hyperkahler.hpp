#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "higgsline/error.hpp"
#include "higgsline/moduli.hpp"
#include "higgsline/period_matrix.hpp"
#include "higgsline/quaternion.hpp"

namespace higgsline {

// Point of H^k in unitary coordinates q_u = C q, p_u = C p with
// C = sqrt(2 Im Pi). In these coordinates the moduli metric is the flat
// metric of H^k and the formulas below carry no Pi dependence.
struct UnitaryCoordinates {
  Eigen::VectorXcd q, p;
};

UnitaryCoordinates to_unitary(const DolbeaultPoint& x, const PeriodMatrix& pi);
DolbeaultPoint from_unitary(const UnitaryCoordinates& x, const PeriodMatrix& pi);

// Tangent vectors to H^k are vectors of H^k itself (in unitary coordinates).
using TangentVector = QuaternionVector;

// Flat Riemannian metric Re(dq1 . conj(dq2)) + Re(dp1 . conj(dp2)).
double metric(const TangentVector& v1, const TangentVector& v2);

// Kahler form of the complex structure u: omega_u(v1, v2) = g(u v1, v2).
double kahler_form(const ComplexStructure& u, const TangentVector& v1,
                   const TangentVector& v2);

// omega_{u1} + i omega_{u2} for arbitrary imaginary quaternions, with no
// frame validation; building block for complex_symplectic and the twistor
// fiber form.
std::complex<double> form_pair(const Quaternion& u1, const Quaternion& u2,
                               const TangentVector& v1, const TangentVector& v2);

// The complex-symplectic form holomorphic with respect to u, in the frame
// (u1, u2 = u x u1): omega_{u1} + i omega_{u2}. Requires u1 orthogonal to u.
std::complex<double> complex_symplectic(const ComplexStructure& u,
                                        const ComplexStructure& u1,
                                        const TangentVector& v1, const TangentVector& v2,
                                        double frame_tol = 1e-9);

// Cotangent-bundle symplectic form dq ^ dp in unitary coordinates:
// dq1 . dp2 - dq2 . dp1, bilinear (no conjugation).
std::complex<double> cotangent_form(const TangentVector& v1, const TangentVector& v2);

// --- the C*-action on real log-periods --------------------------------------

// The 2k x 2k real matrix JPi with JPi^2 = -1 expressing multiplication by i
// on the real log-period coordinates (alpha, beta) of the Higgs field.
Eigen::MatrixXd jpi_matrix(const PeriodMatrix& pi);

// Real log-periods of p: alpha = Re p, beta = Re Pi Re p - Im Pi Im p.
// These are half the real parts of the de Rham periods (a, b).
Eigen::VectorXd log_periods(const Eigen::VectorXcd& p, const PeriodMatrix& pi);
Eigen::VectorXcd p_from_log_periods(const Eigen::VectorXd& ab, const PeriodMatrix& pi);

// Action of lambda in C* on log-periods: (Re lambda) I + (Im lambda) JPi.
Eigen::VectorXd cstar_act_periods(const PeriodMatrix& pi, std::complex<double> lambda,
                                  const Eigen::VectorXd& ab);

// The C*-action in each coordinate system. On Higgs coordinates it scales
// the Higgs field, (q, p) -> (q, lambda p); on Betti and de Rham points it
// fixes the unitary part and transports the log moduli by cstar_act_periods.
DolbeaultPoint cstar_act(const DolbeaultPoint& x, std::complex<double> lambda);
BettiPoint cstar_act(const BettiPoint& x, std::complex<double> lambda,
                     const PeriodMatrix& pi);
DeRhamPoint cstar_act(const DeRhamPoint& x, std::complex<double> lambda,
                      const PeriodMatrix& pi);

// --- energy and its flows ----------------------------------------------------

// Energy (1/2)|p|^2 in unitary coordinates.
double energy(const UnitaryCoordinates& x);
double energy(const DolbeaultPoint& x, const PeriodMatrix& pi);

// Downward gradient flow of the energy: p(t) = e^{-t} p(0), q fixed.
DolbeaultPoint gradient_flow(const DolbeaultPoint& x, double t);
UnitaryCoordinates gradient_flow(const UnitaryCoordinates& x, double t);

// Hamiltonian circle action: p -> e^{i theta} p, q fixed.
DolbeaultPoint circle_act(const DolbeaultPoint& x, double theta);
UnitaryCoordinates circle_act(const UnitaryCoordinates& x, double theta);

// --- quaternionization --------------------------------------------------------

// Real rank of (x + yi) (x) v -> (x + yu) v : C (x)_R V -> H^k, where V is
// the q-coordinate subspace. Full rank 4k characterizes u != +-I; at u = +-I
// the image is V itself and the rank drops to 2k. Threshold is relative to
// the largest singular value.
int quaternionization_rank(const ComplexStructure& u, int k, double rel_threshold = 1e-8);

// --- Kahler potentials ---------------------------------------------------------

double potential_phi(const QuaternionVector& v);  // |p|^2 / 2
double potential_rho(const QuaternionVector& v);  // (|q|^2 + |p|^2) / 2
double potential_psi(const QuaternionVector& v);  // |q|^2 - |p|^2

using ScalarField = std::function<double(const QuaternionVector&)>;

enum class PotentialClaim {
  KahlerPotential,  // -1/2 d(df o u) = omega_u
  Pluriharmonic,    // d(df o u) = 0
};

// Checks the claim by central finite differences of step h on the real 4k
// coordinates at the given point, over all coordinate 2-planes. Returns the
// maximum deviation from omega_u (Kahler potential claim) resp. from zero
// (pluriharmonicity).
double potential_residual(const ComplexStructure& u, const ScalarField& f,
                          const QuaternionVector& at, double h, PotentialClaim claim);

// Least-squares fit of the constant c with -1/2 d(df o u) = c * omega_u over
// all coordinate 2-planes; measures normalization conventions.
double potential_scale(const ComplexStructure& u, const ScalarField& f,
                       const QuaternionVector& at, double h);

}  // namespace higgsline
