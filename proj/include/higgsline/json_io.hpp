#pragma once

#include <complex>
#include <string>
#include <variant>

#include <json.hpp>

#include "higgsline/moduli.hpp"
#include "higgsline/period_matrix.hpp"
#include "higgsline/twistor.hpp"

namespace higgsline {

// JSON conventions: every complex number is an object {"re": x, "im": y};
// serialization goes through nlohmann's shortest-round-trip doubles, so
// values survive a save/load cycle bit for bit.

nlohmann::json to_json(std::complex<double> z);
std::complex<double> complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd cvector_from_json(const nlohmann::json& j);

// {"k": n, "Pi": [[... row-major ...]]}
nlohmann::json to_json(const PeriodMatrix& pi);
PeriodMatrix period_matrix_from_json(const nlohmann::json& j,
                                     double symmetry_tol = PeriodMatrix::kSymmetryTol);

// Tagged union of the three coordinate systems:
// {"system": "betti"|"derham"|"dolbeault", "k": n, <system fields>}.
using ModuliPoint = std::variant<BettiPoint, DeRhamPoint, DolbeaultPoint>;

nlohmann::json to_json(const ModuliPoint& x);
ModuliPoint moduli_point_from_json(const nlohmann::json& j);

std::string system_name(const ModuliPoint& x);

// {"chart": 1|2, "base": {"re","im"}, "v": [...]}
nlohmann::json to_json(const TwistorPoint& x);
TwistorPoint twistor_point_from_json(const nlohmann::json& j);

// Thrown on structurally invalid JSON (wrong shape, missing fields). The CLI
// maps it, like nlohmann's own parse errors, to the usage/IO exit code.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace higgsline
