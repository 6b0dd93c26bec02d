#include "doctest.h"

#include <numbers>

#include "higgsline/hyperkahler.hpp"
#include "higgsline/random.hpp"

using namespace higgsline;

namespace {
PeriodMatrix square_torus() {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = Complex(0, 1);
  return PeriodMatrix(m);
}

Eigen::VectorXcd single(Complex z) {
  Eigen::VectorXcd v(1);
  v[0] = z;
  return v;
}

QuaternionVector pair1(Complex q, Complex p) {
  return QuaternionVector(single(q), single(p));
}
}  // namespace

TEST_CASE("flat metric on unit tangent vectors") {
  CHECK_EQ(metric(pair1(1.0, 0.0), pair1(1.0, 0.0)), doctest::Approx(1.0));
  CHECK_EQ(metric(pair1(Complex(0, 1), 0.0), pair1(1.0, 0.0)), doctest::Approx(0.0));
  Rng rng(51);
  for (int t = 0; t < 200; ++t) {
    QuaternionVector v = rng.tangent(2), w = rng.tangent(2);
    ComplexStructure I = ComplexStructure::I();
    CHECK_EQ(metric(act(I, v), act(I, w)), doctest::Approx(metric(v, w)));
  }
}

TEST_CASE("kahler form against I on coordinate vectors") {
  CHECK_EQ(kahler_form(ComplexStructure::I(), pair1(1.0, 0.0), pair1(Complex(0, 1), 0.0)),
           doctest::Approx(1.0));
  Rng rng(52);
  for (int t = 0; t < 200; ++t) {
    ComplexStructure u = rng.complex_structure();
    QuaternionVector v = rng.tangent(2);
    CHECK_LE(std::abs(kahler_form(u, v, v)), 1e-12);
  }
}

TEST_CASE("complex symplectic form for the frame (-I, K)") {
  Rng rng(53);
  ComplexStructure minus_i(-1, 0, 0);
  for (int t = 0; t < 200; ++t) {
    QuaternionVector v = rng.tangent(2), w = rng.tangent(2);
    Complex lhs = complex_symplectic(ComplexStructure::J(), minus_i, v, w);
    Complex rhs(-kahler_form(ComplexStructure::I(), v, w),
                kahler_form(ComplexStructure::K(), v, w));
    CHECK_LE(std::abs(lhs - rhs), 1e-12);
  }
}

TEST_CASE("quarter turn of the frame multiplies the form by i") {
  Rng rng(54);
  for (int t = 0; t < 200; ++t) {
    QuaternionVector v = rng.tangent(2), w = rng.tangent(2);
    Complex base = complex_symplectic(ComplexStructure::I(), ComplexStructure::J(), v, w);
    // theta = pi/2 sends (u1, u2) = (J, K) to (-K, J)
    Complex turned = form_pair(-Quaternion::k(), Quaternion::j(), v, w);
    CHECK_LE(std::abs(turned - Complex(0, 1) * base), 1e-12);
  }
}

TEST_CASE("a non-orthogonal frame is rejected") {
  CHECK_THROWS_AS(complex_symplectic(ComplexStructure::I(), ComplexStructure::I(),
                                     pair1(1.0, 0.0), pair1(0.0, 1.0)),
                  Error);
}

TEST_CASE("the cotangent form is Omega_(J,K) on coordinate vectors") {
  Rng rng(55);
  for (int t = 0; t < 300; ++t) {
    QuaternionVector v = rng.tangent(2), w = rng.tangent(2);
    Complex tstar = cotangent_form(v, w);
    Complex jk = complex_symplectic(ComplexStructure::I(), ComplexStructure::J(), v, w);
    CHECK_LE(std::abs(tstar - jk), 1e-12);
  }
}

TEST_CASE("jpi of the square torus") {
  Eigen::MatrixXd jp = jpi_matrix(square_torus());
  CHECK_EQ(jp(0, 0), doctest::Approx(0.0));
  CHECK_EQ(jp(0, 1), doctest::Approx(1.0));
  CHECK_EQ(jp(1, 0), doctest::Approx(-1.0));
  CHECK_EQ(jp(1, 1), doctest::Approx(0.0));
}

TEST_CASE("jpi squares to minus the identity") {
  Rng rng(56);
  for (int k : {1, 2, 3, 4})
    for (int t = 0; t < 25; ++t) {
      Eigen::MatrixXd jp = jpi_matrix(rng.period_matrix(k));
      Eigen::MatrixXd sq = jp * jp + Eigen::MatrixXd::Identity(2 * k, 2 * k);
      CHECK_LE(sq.cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST_CASE("multiplication by i in period coordinates") {
  Eigen::VectorXd ab(2);
  ab << 1.0, 0.0;
  Eigen::VectorXd out = cstar_act_periods(square_torus(), Complex(0, 1), ab);
  CHECK_EQ(out[0], doctest::Approx(0.0));
  CHECK_EQ(out[1], doctest::Approx(-1.0));
}

TEST_CASE("period transport matches scaling the Higgs field") {
  Rng rng(57);
  for (int t = 0; t < 300; ++t) {
    PeriodMatrix pi = rng.period_matrix(2);
    Eigen::VectorXcd p = rng.cvector(2);
    Complex lambda = rng.cnormal();
    if (std::abs(lambda) < 1e-2) continue;
    Eigen::VectorXd lhs = cstar_act_periods(pi, lambda, log_periods(p, pi));
    Eigen::VectorXd rhs = log_periods((lambda * p).eval(), pi);
    CHECK_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
    CHECK_LE((p_from_log_periods(log_periods(p, pi), pi) - p).cwiseAbs().maxCoeff(),
             1e-10);
  }
}

TEST_CASE("lambda = 0 is rejected") {
  Eigen::VectorXd ab(2);
  ab << 1.0, 0.0;
  CHECK_THROWS_AS(cstar_act_periods(square_torus(), 0.0, ab), Error);
  CHECK_THROWS_AS(cstar_act(DolbeaultPoint(single(0.0), single(1.0)), 0.0), Error);
}

TEST_CASE("energy and the downward gradient flow") {
  UnitaryCoordinates x{single(0.0), single(2.0)};
  CHECK_EQ(energy(x), doctest::Approx(2.0));
  UnitaryCoordinates moved = gradient_flow(x, std::log(2.0));
  CHECK_EQ(std::abs(moved.p[0]), doctest::Approx(1.0));
  CHECK_EQ(energy(moved), doctest::Approx(0.5));
  UnitaryCoordinates fixed = gradient_flow(UnitaryCoordinates{single(1.0), single(0.0)}, 3.0);
  CHECK_EQ(energy(fixed), doctest::Approx(0.0));
  CHECK_LE(std::abs(fixed.q[0] - 1.0), 1e-15);
}

TEST_CASE("circle action at theta = pi negates the Higgs field") {
  DolbeaultPoint z(single(1.0), single(Complex(2, 1)));
  DolbeaultPoint w = circle_act(z, std::numbers::pi);
  CHECK_LE(std::abs(w.p[0] + z.p[0]), 1e-12);
  CHECK_LE(std::abs(w.q[0] - z.q[0]), 1e-15);
}

TEST_CASE("cstar action is consistent across coordinate systems") {
  Rng rng(58);
  for (int t = 0; t < 200; ++t) {
    PeriodMatrix pi = rng.period_matrix(2);
    DolbeaultPoint z(rng.cvector(2), rng.cvector(2));
    Complex lambda = rng.cnormal();
    if (std::abs(lambda) < 1e-2) continue;
    BettiPoint lhs = dolbeault_to_betti(cstar_act(z, lambda), pi);
    BettiPoint rhs = cstar_act(dolbeault_to_betti(z, pi), lambda, pi);
    for (int j = 0; j < 2; ++j) {
      CHECK_LE(std::abs(lhs.rhoA[j] - rhs.rhoA[j]) / (1.0 + std::abs(rhs.rhoA[j])), 1e-10);
      CHECK_LE(std::abs(lhs.rhoB[j] - rhs.rhoB[j]) / (1.0 + std::abs(rhs.rhoB[j])), 1e-10);
    }
  }
}

TEST_CASE("quaternionization rank drops only at the poles") {
  Rng rng(59);
  for (int k : {1, 2, 3}) {
    CHECK_EQ(quaternionization_rank(ComplexStructure::J(), k), 4 * k);
    CHECK_EQ(quaternionization_rank(ComplexStructure::I(), k), 2 * k);
    CHECK_EQ(quaternionization_rank(ComplexStructure(-1, 0, 0), k), 2 * k);
    for (int t = 0; t < 10; ++t) {
      ComplexStructure u = rng.complex_structure();
      while (std::abs(std::abs(u.uI()) - 1.0) < 1e-2) u = rng.complex_structure();
      CHECK_EQ(quaternionization_rank(u, k), 4 * k);
    }
  }
}

TEST_CASE("rho is a Kahler potential for every structure") {
  Rng rng(60);
  QuaternionVector x = rng.tangent(2);
  for (const ComplexStructure& u :
       {ComplexStructure::I(), ComplexStructure::J(), ComplexStructure::K()})
    CHECK_LE(potential_residual(u, potential_rho, x, 1e-3, PotentialClaim::KahlerPotential),
             1e-5);
}

TEST_CASE("psi is pluriharmonic for J") {
  Rng rng(61);
  QuaternionVector x = rng.tangent(2);
  CHECK_LE(potential_residual(ComplexStructure::J(), potential_psi, x, 1e-3,
                              PotentialClaim::Pluriharmonic),
           1e-5);
}

TEST_CASE("phi fails as a potential for I but works doubled for J") {
  Rng rng(62);
  QuaternionVector x = rng.tangent(2);
  CHECK_GT(potential_residual(ComplexStructure::I(), potential_phi, x, 1e-3,
                              PotentialClaim::KahlerPotential),
           1e-2);
  auto doubled = [](const QuaternionVector& v) { return v.p.squaredNorm(); };
  CHECK_LE(potential_residual(ComplexStructure::J(), doubled, x, 1e-3,
                              PotentialClaim::KahlerPotential),
           1e-5);
  CHECK_EQ(potential_scale(ComplexStructure::J(), potential_phi, x, 1e-3),
           doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("unitary coordinates undo the period normalization") {
  Rng rng(63);
  for (int t = 0; t < 100; ++t) {
    PeriodMatrix pi = rng.period_matrix(3);
    DolbeaultPoint z(rng.cvector(3), rng.cvector(3));
    UnitaryCoordinates u = to_unitary(z, pi);
    DolbeaultPoint back = from_unitary(u, pi);
    CHECK_LE((back.q - z.q).cwiseAbs().maxCoeff(), 1e-10);
    CHECK_LE((back.p - z.p).cwiseAbs().maxCoeff(), 1e-10);
  }
}
