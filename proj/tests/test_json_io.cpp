#include "doctest.h"

#include "higgsline/json_io.hpp"
#include "higgsline/random.hpp"

using namespace higgsline;

namespace {
double vdist(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("complex numbers are objects with re and im") {
  Complex z(1.5, -2.0);
  nlohmann::json j = to_json(z);
  CHECK_EQ(j["re"].get<double>(), doctest::Approx(1.5));
  CHECK_EQ(j["im"].get<double>(), doctest::Approx(-2.0));
  CHECK_EQ(complex_from_json(j), z);
  CHECK_THROWS_AS(complex_from_json(nlohmann::json::array({1.5, -2.0})), ParseError);
  CHECK_THROWS_AS(complex_from_json(nlohmann::json{{"re", 1.0}}), ParseError);
}

TEST_CASE("complex vectors round-trip") {
  Rng rng(91);
  Eigen::VectorXcd v = rng.cvector(5);
  CHECK_LE(vdist(cvector_from_json(to_json(v)), v), 0.0);
  CHECK_THROWS_AS(cvector_from_json(nlohmann::json{{"not", "array"}}), ParseError);
}

TEST_CASE("period matrices round-trip") {
  Rng rng(92);
  PeriodMatrix pi = rng.period_matrix(3);
  PeriodMatrix back = period_matrix_from_json(to_json(pi));
  CHECK_LE((back.matrix() - pi.matrix()).cwiseAbs().maxCoeff(), 0.0);
  CHECK_THROWS_AS(period_matrix_from_json(nlohmann::json{{"k", 1}}), ParseError);
  nlohmann::json wrong_shape{{"k", 2}, {"Pi", nlohmann::json::array()}};
  CHECK_THROWS_AS(period_matrix_from_json(wrong_shape), ParseError);
}

TEST_CASE("invalid period matrices parse but fail validation") {
  nlohmann::json cell{{"re", 0.0}, {"im", -1.0}};
  nlohmann::json j;
  j["k"] = 1;
  j["Pi"] = nlohmann::json::array({nlohmann::json::array({cell})});
  CHECK_THROWS_AS(period_matrix_from_json(j), Error);
}

TEST_CASE("moduli points round-trip in all three systems") {
  Rng rng(93);
  BettiPoint b(rng.cvector(2), rng.cvector(2));
  DeRhamPoint d(rng.cvector(2), rng.cvector(2));
  DolbeaultPoint z(rng.cvector(2), rng.cvector(2));

  ModuliPoint mb = moduli_point_from_json(to_json(ModuliPoint(b)));
  CHECK_EQ(system_name(mb), "betti");
  CHECK_LE(vdist(std::get<BettiPoint>(mb).rhoA, b.rhoA), 0.0);
  CHECK_LE(vdist(std::get<BettiPoint>(mb).rhoB, b.rhoB), 0.0);

  ModuliPoint md = moduli_point_from_json(to_json(ModuliPoint(d)));
  CHECK_EQ(system_name(md), "derham");
  CHECK_LE(vdist(std::get<DeRhamPoint>(md).a, d.a), 0.0);

  ModuliPoint mz = moduli_point_from_json(to_json(ModuliPoint(z)));
  CHECK_EQ(system_name(mz), "dolbeault");
  CHECK_LE(vdist(std::get<DolbeaultPoint>(mz).p, z.p), 0.0);
}

TEST_CASE("malformed moduli points are rejected") {
  CHECK_THROWS_AS(moduli_point_from_json(nlohmann::json{{"system", "betti"}, {"k", 1}}),
                  ParseError);
  CHECK_THROWS_AS(moduli_point_from_json(nlohmann::json{{"system", "nope"}, {"k", 1}}),
                  ParseError);
  nlohmann::json wrong_len{{"system", "dolbeault"},
                           {"k", 2},
                           {"q", nlohmann::json::array({to_json(Complex(1, 0))})},
                           {"p", nlohmann::json::array({to_json(Complex(1, 0))})}};
  CHECK_THROWS_AS(moduli_point_from_json(wrong_len), ParseError);
}

TEST_CASE("twistor points round-trip") {
  Rng rng(94);
  TwistorPoint pt(Chart::Two, Complex(0.5, -1.0), rng.cvector(4));
  TwistorPoint back = twistor_point_from_json(to_json(pt));
  CHECK_EQ(back.chart, pt.chart);
  CHECK_EQ(back.base, pt.base);
  CHECK_LE(vdist(back.v, pt.v), 0.0);
  CHECK_THROWS_AS(twistor_point_from_json(nlohmann::json{{"chart", 3}}), ParseError);
}

TEST_CASE("serialized doubles reparse to the same bits") {
  // shortest round-trip printing: dump then parse is lossless
  Rng rng(95);
  for (int t = 0; t < 100; ++t) {
    Complex z = rng.cnormal() * 1e3;
    nlohmann::json j = nlohmann::json::parse(to_json(z).dump());
    CHECK_EQ(complex_from_json(j), z);
  }
}
