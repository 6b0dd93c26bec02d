#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "higgsline/error.hpp"
#include "higgsline/lattice.hpp"
#include "higgsline/period_matrix.hpp"

namespace higgsline {

// The three coordinate systems on the rank-one moduli space of a genus-k
// surface. Throughout, 2k-vectors are in block order: entries attached to
// the A-cycles first (index 1..k), then the B-cycles (k+1..2k).

// Holonomies (rhoA_j, rhoB_j) in (C*)^{2k}.
struct BettiPoint {
  Eigen::VectorXcd rhoA, rhoB;

  BettiPoint() = default;
  BettiPoint(Eigen::VectorXcd a, Eigen::VectorXcd b);

  Eigen::Index k() const { return rhoA.size(); }
};

// Periods (a_j, b_j) of a flat connection form, taken modulo 2 pi i Z^{2k};
// canonical representatives keep every imaginary part in [0, 2 pi).
struct DeRhamPoint {
  Eigen::VectorXcd a, b;

  DeRhamPoint() = default;
  DeRhamPoint(Eigen::VectorXcd a_, Eigen::VectorXcd b_);

  Eigen::Index k() const { return a.size(); }
};

// Higgs coordinates (q, p): q modulo the lattice pi (Im Pi)^{-1}(Z^k + Pi Z^k),
// p free in C^k.
struct DolbeaultPoint {
  Eigen::VectorXcd q, p;

  DolbeaultPoint() = default;
  DolbeaultPoint(Eigen::VectorXcd q_, Eigen::VectorXcd p_);

  Eigen::Index k() const { return q.size(); }
};

// --- canonical representatives -------------------------------------------

DeRhamPoint canonical(const DeRhamPoint& x);
DolbeaultPoint canonical(const DolbeaultPoint& x, const PeriodMatrix& pi,
                         double tol = Lattice::kCoordTol);

// --- words in the surface group ------------------------------------------

// Letter of a word in the standard generators. Generators are indexed
// 1..2k: 1..k are the A-cycles, k+1..2k the B-cycles.
struct WordLetter {
  int generator = 1;
  int exponent = 1;
};
using Word = std::vector<WordLetter>;

// Product of commutators [A_1,B_1]...[A_k,B_k]; the defining relation of the
// surface group, spelled out as a word of 4k letters.
Word surface_relator(int k);

std::complex<double> evaluate_word(const BettiPoint& x, const Word& w);

// --- Betti <-> de Rham ----------------------------------------------------

// Exponentiated periods: rho = exp(a, b) componentwise.
BettiPoint holonomy(const DeRhamPoint& x);
// Principal logarithm with imaginary part in [0, 2 pi); inverse of holonomy
// on canonical representatives.
DeRhamPoint log_holonomy(const BettiPoint& x);

// Splits rho into its unitary part and the real 2k-vector of log moduli
// (log|rhoA_1..k|, log|rhoB_1..k|), so rho = unitary .* exp(log_radii).
struct BettiDecomposition {
  BettiPoint unitary;
  Eigen::VectorXd log_radii;
};
BettiDecomposition betti_decompose(const BettiPoint& x);

// --- de Rham <-> Dolbeault -------------------------------------------------

DolbeaultPoint derham_to_dolbeault(const DeRhamPoint& x, const PeriodMatrix& pi);
DeRhamPoint dolbeault_to_derham(const DolbeaultPoint& x, const PeriodMatrix& pi);

BettiPoint dolbeault_to_betti(const DolbeaultPoint& x, const PeriodMatrix& pi);
DolbeaultPoint betti_to_dolbeault(const BettiPoint& x, const PeriodMatrix& pi);

// Normalized Jacobian coordinate z = (1/pi) (Im Pi) q of the q-part; its
// lattice is Z^k + Pi Z^k.
Eigen::VectorXcd jacobian_coordinate(const DolbeaultPoint& x, const PeriodMatrix& pi);

// --- group structure --------------------------------------------------------

BettiPoint group_law(const BettiPoint& x, const BettiPoint& y);
DeRhamPoint group_law(const DeRhamPoint& x, const DeRhamPoint& y);
DolbeaultPoint group_law(const DolbeaultPoint& x, const DolbeaultPoint& y,
                         const PeriodMatrix& pi);

// --- real structures ---------------------------------------------------------

// The two antiholomorphic involutions of the moduli space: Unitary fixes the
// locus of unitary holonomies, Real the locus of real holonomies.
enum class Involution { Unitary, Real };

BettiPoint real_structure(const BettiPoint& x, Involution which);
DeRhamPoint real_structure(const DeRhamPoint& x, Involution which);
DolbeaultPoint real_structure(const DolbeaultPoint& x, Involution which,
                              const PeriodMatrix& pi);

// --- flows and fibration ------------------------------------------------------

// Time-t Hamiltonian flow of the angle function attached to the first
// A-cycle with integer weight n >= 0: multiplies rhoB_1 by exp(i n t).
BettiPoint hamiltonian_flow(const BettiPoint& x, int n, double t);

// Projection to the Higgs field: the p-coordinate.
Eigen::VectorXcd hitchin_map(const DolbeaultPoint& x);

}  // namespace higgsline
