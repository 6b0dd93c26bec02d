#include "higgsline/json_io.hpp"

namespace higgsline {

using nlohmann::json;

json to_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") ||
      !j["re"].is_number() || !j["im"].is_number())
    throw ParseError("expected a complex number as {\"re\": x, \"im\": y}");
  return {j["re"].get<double>(), j["im"].get<double>()};
}

json to_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Eigen::VectorXcd cvector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of complex numbers");
  Eigen::VectorXcd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = complex_from_json(j[i]);
  return v;
}

json to_json(const PeriodMatrix& pi) {
  int k = pi.genus();
  json rows = json::array();
  for (int i = 0; i < k; ++i) {
    json row = json::array();
    for (int j = 0; j < k; ++j) row.push_back(to_json(pi.matrix()(i, j)));
    rows.push_back(row);
  }
  return json{{"k", k}, {"Pi", rows}};
}

PeriodMatrix period_matrix_from_json(const json& j, double symmetry_tol) {
  if (!j.is_object() || !j.contains("k") || !j.contains("Pi"))
    throw ParseError("expected {\"k\": n, \"Pi\": [[...]]}");
  if (!j["k"].is_number_integer()) throw ParseError("\"k\" must be an integer");
  int k = j["k"].get<int>();
  const json& rows = j["Pi"];
  if (k < 1 || !rows.is_array() || rows.size() != static_cast<std::size_t>(k))
    throw ParseError("\"Pi\" must be a k x k array of complex numbers");
  Eigen::MatrixXcd m(k, k);
  for (int i = 0; i < k; ++i) {
    if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(k))
      throw ParseError("\"Pi\" must be a k x k array of complex numbers");
    for (int l = 0; l < k; ++l) m(i, l) = complex_from_json(rows[i][l]);
  }
  return PeriodMatrix(std::move(m), symmetry_tol);
}

std::string system_name(const ModuliPoint& x) {
  if (std::holds_alternative<BettiPoint>(x)) return "betti";
  if (std::holds_alternative<DeRhamPoint>(x)) return "derham";
  return "dolbeault";
}

json to_json(const ModuliPoint& x) {
  json out;
  out["system"] = system_name(x);
  if (const auto* b = std::get_if<BettiPoint>(&x)) {
    out["k"] = static_cast<int>(b->k());
    out["rhoA"] = to_json(b->rhoA);
    out["rhoB"] = to_json(b->rhoB);
  } else if (const auto* d = std::get_if<DeRhamPoint>(&x)) {
    out["k"] = static_cast<int>(d->k());
    out["a"] = to_json(d->a);
    out["b"] = to_json(d->b);
  } else {
    const auto& h = std::get<DolbeaultPoint>(x);
    out["k"] = static_cast<int>(h.k());
    out["q"] = to_json(h.q);
    out["p"] = to_json(h.p);
  }
  return out;
}

namespace {

Eigen::VectorXcd field(const json& j, const char* name, int k) {
  if (!j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  Eigen::VectorXcd v = cvector_from_json(j[name]);
  if (v.size() != k)
    throw ParseError(std::string("field \"") + name + "\" must have k entries");
  return v;
}

}  // namespace

ModuliPoint moduli_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("system") || !j.contains("k") ||
      !j["system"].is_string() || !j["k"].is_number_integer())
    throw ParseError("expected {\"system\": ..., \"k\": n, ...}");
  std::string system = j["system"].get<std::string>();
  int k = j["k"].get<int>();
  if (k < 1) throw ParseError("\"k\" must be positive");
  if (system == "betti") return BettiPoint(field(j, "rhoA", k), field(j, "rhoB", k));
  if (system == "derham") return DeRhamPoint(field(j, "a", k), field(j, "b", k));
  if (system == "dolbeault") return DolbeaultPoint(field(j, "q", k), field(j, "p", k));
  throw ParseError("unknown system \"" + system + "\"");
}

json to_json(const TwistorPoint& x) {
  return json{{"chart", x.chart == Chart::One ? 1 : 2},
              {"base", to_json(x.base)},
              {"v", to_json(x.v)}};
}

TwistorPoint twistor_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("chart") || !j.contains("base") || !j.contains("v") ||
      !j["chart"].is_number_integer())
    throw ParseError("expected {\"chart\": 1|2, \"base\": {...}, \"v\": [...]}");
  int chart = j["chart"].get<int>();
  if (chart != 1 && chart != 2) throw ParseError("\"chart\" must be 1 or 2");
  Eigen::VectorXcd v = cvector_from_json(j["v"]);
  if (v.size() == 0 || v.size() % 2 != 0)
    throw ParseError("\"v\" must have even positive length");
  return TwistorPoint(chart == 1 ? Chart::One : Chart::Two, complex_from_json(j["base"]),
                      std::move(v));
}

}  // namespace higgsline
