#include "doctest.h"

#include <complex>

#include "higgsline/quaternion.hpp"
#include "higgsline/random.hpp"

using namespace higgsline;

namespace {
double qdist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }
double sdist(const ComplexStructure& a, const ComplexStructure& b) {
  return qdist(a.quaternion(), b.quaternion());
}
}  // namespace

TEST_CASE("Hamilton identities") {
  Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j(),
             k = Quaternion::k();
  CHECK_LE(qdist(i * j, k), 1e-15);
  CHECK_LE(qdist(j * k, i), 1e-15);
  CHECK_LE(qdist(k * i, j), 1e-15);
  CHECK_LE(qdist(i * i, -one), 1e-15);
  CHECK_LE(qdist(j * i, -k), 1e-15);
  CHECK_LE(qdist(one * i, i), 1e-15);
}

TEST_CASE("(1+I)(1-I) = 2") {
  Quaternion a = Quaternion::one() + Quaternion::i();
  Quaternion b = Quaternion::one() - Quaternion::i();
  CHECK_LE(qdist(a * b, 2.0 * Quaternion::one()), 1e-15);
}

TEST_CASE("inverse and conjugation") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Quaternion g = rng.quaternion();
    if (g.norm() < 1e-3) continue;
    CHECK_LE(qdist(g * inverse(g), Quaternion::one()), 1e-12);
    CHECK_LE(qdist(conj(g * g), conj(g) * conj(g) + (g * g - g * g)), 1e-12);
    Quaternion h = rng.quaternion();
    CHECK_LE(qdist(conj(g * h), conj(h) * conj(g)), 1e-12);
  }
}

TEST_CASE("cross products of the standard frame") {
  CHECK_LE(qdist(cross(Quaternion::i(), Quaternion::j()), Quaternion::k()), 1e-15);
  CHECK_LE(qdist(cross(Quaternion::j(), Quaternion::k()), Quaternion::i()), 1e-15);
  CHECK_LE(qdist(cross(Quaternion::j(), -Quaternion::i()), Quaternion::k()), 1e-15);
}

TEST_CASE("act(I, (q,p)) multiplies both blocks by i") {
  Rng rng(12);
  QuaternionVector v = rng.tangent(3);
  QuaternionVector w = act(ComplexStructure::I(), v);
  Complex i(0, 1);
  CHECK_LE((w.q - i * v.q).cwiseAbs().maxCoeff(), 1e-15);
  CHECK_LE((w.p - i * v.p).cwiseAbs().maxCoeff(), 1e-15);
}

TEST_CASE("act(J, (q,p)) = (-conj(p), conj(q))") {
  Rng rng(13);
  QuaternionVector v = rng.tangent(2);
  QuaternionVector w = act(ComplexStructure::J(), v);
  CHECK_LE((w.q + v.p.conjugate()).cwiseAbs().maxCoeff(), 1e-15);
  CHECK_LE((w.p - v.q.conjugate()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST_CASE("act(K, (1,0)) = (0, i) at k=1") {
  QuaternionVector v(Eigen::VectorXcd::Ones(1), Eigen::VectorXcd::Zero(1));
  QuaternionVector w = act(ComplexStructure::K(), v);
  CHECK_LE(std::abs(w.q[0]), 1e-15);
  CHECK_LE(std::abs(w.p[0] - Complex(0, 1)), 1e-15);
}

TEST_CASE("quaternion action is a left module structure") {
  Rng rng(14);
  for (int t = 0; t < 500; ++t) {
    Quaternion g = rng.quaternion(), h = rng.quaternion();
    QuaternionVector v = rng.tangent(2);
    QuaternionVector lhs = act(g, act(h, v));
    QuaternionVector rhs = act(g * h, v);
    CHECK_LE((lhs.q - rhs.q).cwiseAbs().maxCoeff(), 1e-12);
    CHECK_LE((lhs.p - rhs.p).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST_CASE("unit imaginary quaternions square to -1") {
  Rng rng(15);
  for (int t = 0; t < 2000; ++t) {
    Quaternion u = rng.complex_structure().quaternion();
    CHECK_LE(qdist(u * u, -Quaternion::one()), 1e-12);
  }
}

TEST_CASE("stereographic chart values at 0, 1, i") {
  CHECK_LE(sdist(stereo_chart1(0.0), ComplexStructure::I()), 1e-15);
  CHECK_LE(sdist(stereo_chart1(1.0), ComplexStructure::J()), 1e-15);
  CHECK_LE(sdist(stereo_chart1(Complex(0, 1)), ComplexStructure::K()), 1e-15);
  CHECK_LE(sdist(stereo_chart2(0.0), antipode(ComplexStructure::I())), 1e-15);
  CHECK_LE(sdist(stereo_chart2(1.0), ComplexStructure::J()), 1e-15);
}

TEST_CASE("charts agree with their conjugation formulas") {
  Rng rng(16);
  for (int t = 0; t < 500; ++t) {
    Complex z = rng.cnormal();
    CHECK_LE(sdist(stereo_chart1(z), stereo_chart1_conjugation(z)), 1e-12);
    CHECK_LE(sdist(stereo_chart2(z), stereo_chart2_conjugation(z)), 1e-12);
  }
}

TEST_CASE("chart overlap: chart1(zeta) = chart2(1/zeta)") {
  Rng rng(17);
  for (int t = 0; t < 500; ++t) {
    Complex z = rng.cnormal();
    if (std::abs(z) < 1e-3) continue;
    CHECK_LE(sdist(stereo_chart1(z), stereo_chart2(1.0 / z)), 1e-12);
  }
}

TEST_CASE("antipode negates and is an involution") {
  CHECK_LE(sdist(antipode(ComplexStructure::I()),
                 ComplexStructure(-1.0, 0.0, 0.0)), 1e-15);
  CHECK_LE(sdist(antipode(stereo_chart1(1.0)), ComplexStructure(0.0, -1.0, 0.0)),
           1e-15);
  Rng rng(18);
  for (int t = 0; t < 200; ++t) {
    ComplexStructure u = rng.complex_structure();
    CHECK_LE(sdist(antipode(antipode(u)), u), 1e-12);
  }
}

TEST_CASE("antipode in chart coordinates") {
  Rng rng(19);
  for (int t = 0; t < 200; ++t) {
    Complex z = rng.cnormal();
    if (std::abs(z) < 1e-3) continue;
    ComplexStructure a = antipode(stereo_chart1(z));
    CHECK_LE(sdist(a, stereo_chart1(antipode_in_chart(z))), 1e-12);
    CHECK_LE(sdist(a, stereo_chart2(antipode_to_other_chart(z))), 1e-12);
  }
  CHECK_THROWS_AS(antipode_in_chart(0.0), Error);
}

TEST_CASE("complex pair encoding round-trips") {
  Quaternion g{0.3, -1.2, 0.7, 2.1};
  auto [a, b] = g.complex_pair();
  CHECK_LE(qdist(Quaternion::from_complex_pair(a, b), g), 1e-15);
}

TEST_CASE("constructors reject bad input") {
  CHECK_THROWS_AS(ComplexStructure(2.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(QuaternionVector(Eigen::VectorXcd::Zero(2), Eigen::VectorXcd::Zero(3)),
                  Error);
  CHECK_THROWS_AS(inverse(Quaternion{0, 0, 0, 0}), Error);
}
