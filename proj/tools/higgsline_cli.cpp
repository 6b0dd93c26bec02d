// Command-line surface: validate period matrices, convert moduli points,
// apply actions and flows, run the verification suites, probe twistor space.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "higgsline/hyperkahler.hpp"
#include "higgsline/json_io.hpp"
#include "higgsline/lattice.hpp"
#include "higgsline/moduli.hpp"
#include "higgsline/twistor.hpp"
#include "higgsline/verify.hpp"

namespace {

using higgsline::BettiPoint;
using higgsline::Complex;
using higgsline::DeRhamPoint;
using higgsline::DolbeaultPoint;
using higgsline::Errc;
using higgsline::Error;
using higgsline::Involution;
using higgsline::ModuliPoint;
using higgsline::ParseError;
using higgsline::PeriodMatrix;
using higgsline::TwistorPoint;

constexpr int kExitPass = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

nlohmann::json read_json(const std::string& path) {
  if (path == "-") return nlohmann::json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return nlohmann::json::parse(in);
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

Complex parse_complex(const std::string& raw) {
  std::string s = raw;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s == "i" || s == "+i") return {0.0, 1.0};
  if (s == "-i") return {0.0, -1.0};
  auto number = [](const std::string& t) {
    std::size_t idx = 0;
    double v = std::stod(t, &idx);
    if (idx != t.size()) throw ParseError("bad number: " + t);
    return v;
  };
  std::size_t comma = s.find(',');
  if (comma == std::string::npos) return {number(s), 0.0};
  return {number(s.substr(0, comma)), number(s.substr(comma + 1))};
}

int point_genus(const ModuliPoint& x) {
  return std::visit([](const auto& p) { return static_cast<int>(p.k()); }, x);
}

void require_same_genus(const ModuliPoint& x, const PeriodMatrix& pi) {
  if (point_genus(x) != pi.genus())
    throw Error(Errc::CoordinateMismatch,
                "point has k = " + std::to_string(point_genus(x)) +
                    " but the period matrix has k = " + std::to_string(pi.genus()));
}

DolbeaultPoint to_dolbeault(const ModuliPoint& x, const PeriodMatrix& pi) {
  if (const auto* b = std::get_if<BettiPoint>(&x)) return betti_to_dolbeault(*b, pi);
  if (const auto* d = std::get_if<DeRhamPoint>(&x)) return derham_to_dolbeault(*d, pi);
  return std::get<DolbeaultPoint>(x);
}

ModuliPoint from_dolbeault(const DolbeaultPoint& z, const std::string& system,
                           const PeriodMatrix& pi) {
  if (system == "betti") return dolbeault_to_betti(z, pi);
  if (system == "derham") return canonical(dolbeault_to_derham(z, pi));
  if (system == "dolbeault") return canonical(z, pi);
  throw ParseError("unknown coordinate system: " + system);
}

ModuliPoint canonical_point(const ModuliPoint& x, const PeriodMatrix& pi) {
  if (const auto* d = std::get_if<DeRhamPoint>(&x)) return canonical(*d);
  if (const auto* z = std::get_if<DolbeaultPoint>(&x)) return canonical(*z, pi);
  return x;
}

double roundtrip_residual(const ModuliPoint& x, const ModuliPoint& y,
                          const PeriodMatrix& pi) {
  ModuliPoint a = canonical_point(x, pi), b = canonical_point(y, pi);
  double r = 0;
  auto vr = [&r](const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
    for (Eigen::Index j = 0; j < u.size(); ++j)
      r = std::max(r, std::abs(u[j] - v[j]) / (1.0 + std::abs(v[j])));
  };
  if (const auto* ba = std::get_if<BettiPoint>(&a)) {
    const auto& bb = std::get<BettiPoint>(b);
    vr(ba->rhoA, bb.rhoA);
    vr(ba->rhoB, bb.rhoB);
  } else if (const auto* da = std::get_if<DeRhamPoint>(&a)) {
    const auto& db = std::get<DeRhamPoint>(b);
    vr(da->a, db.a);
    vr(da->b, db.b);
  } else {
    const auto& za = std::get<DolbeaultPoint>(a);
    const auto& zb = std::get<DolbeaultPoint>(b);
    vr(za.q, zb.q);
    vr(za.p, zb.p);
  }
  return r;
}

int cmd_validate(const std::string& path) {
  try {
    PeriodMatrix pi = higgsline::period_matrix_from_json(read_json(path));
    emit({{"valid", true}, {"k", pi.genus()}});
    return kExitPass;
  } catch (const Error& e) {
    emit({{"valid", false},
          {"error", higgsline::errc_name(e.code())},
          {"detail", e.what()}});
    return kExitDomain;
  }
}

struct ConvertArgs {
  std::string from, to, pi_path, point_path;
  bool roundtrip = false;
};

int cmd_convert(const ConvertArgs& args) {
  PeriodMatrix pi = higgsline::period_matrix_from_json(read_json(args.pi_path));
  ModuliPoint x = higgsline::moduli_point_from_json(read_json(args.point_path));
  if (higgsline::system_name(x) != args.from)
    throw Error(Errc::CoordinateMismatch,
                "point is in system " + higgsline::system_name(x) +
                    " but --from says " + args.from);
  require_same_genus(x, pi);
  ModuliPoint y = from_dolbeault(to_dolbeault(x, pi), args.to, pi);
  if (!args.roundtrip) {
    emit(higgsline::to_json(y));
    return kExitPass;
  }
  ModuliPoint back = from_dolbeault(to_dolbeault(y, pi), args.from, pi);
  emit({{"point", higgsline::to_json(y)},
        {"roundtrip_residual", roundtrip_residual(back, x, pi)}});
  return kExitPass;
}

struct ActArgs {
  std::string pi_path, point_path;
  std::string cstar, flow, iota;
  std::optional<double> gradient;
};

int cmd_act(const ActArgs& args) {
  PeriodMatrix pi = higgsline::period_matrix_from_json(read_json(args.pi_path));
  ModuliPoint x = higgsline::moduli_point_from_json(read_json(args.point_path));
  require_same_genus(x, pi);
  std::string system = higgsline::system_name(x);

  ModuliPoint y = x;
  if (!args.cstar.empty()) {
    Complex lambda = parse_complex(args.cstar);
    if (const auto* b = std::get_if<BettiPoint>(&x))
      y = cstar_act(*b, lambda, pi);
    else if (const auto* d = std::get_if<DeRhamPoint>(&x))
      y = cstar_act(*d, lambda, pi);
    else
      y = cstar_act(std::get<DolbeaultPoint>(x), lambda);
  } else if (!args.flow.empty()) {
    std::size_t comma = args.flow.find(',');
    if (comma == std::string::npos) throw ParseError("--flow expects n,t");
    int n = static_cast<int>(std::lround(parse_complex(args.flow.substr(0, comma)).real()));
    double t = parse_complex(args.flow.substr(comma + 1)).real();
    BettiPoint b = std::holds_alternative<BettiPoint>(x)
                       ? std::get<BettiPoint>(x)
                       : dolbeault_to_betti(to_dolbeault(x, pi), pi);
    BettiPoint moved = hamiltonian_flow(b, n, t);
    y = std::holds_alternative<BettiPoint>(x)
            ? ModuliPoint(moved)
            : from_dolbeault(betti_to_dolbeault(moved, pi), system, pi);
  } else if (args.gradient) {
    DolbeaultPoint moved = gradient_flow(to_dolbeault(x, pi), *args.gradient);
    y = from_dolbeault(moved, system, pi);
  } else if (!args.iota.empty()) {
    Involution which;
    if (args.iota == "U" || args.iota == "u")
      which = Involution::Unitary;
    else if (args.iota == "R" || args.iota == "r")
      which = Involution::Real;
    else
      throw ParseError("--iota expects U or R");
    if (const auto* b = std::get_if<BettiPoint>(&x))
      y = real_structure(*b, which);
    else if (const auto* d = std::get_if<DeRhamPoint>(&x))
      y = real_structure(*d, which);
    else
      y = real_structure(std::get<DolbeaultPoint>(x), which, pi);
  } else {
    throw ParseError("one of --cstar, --flow, --gradient, --iota is required");
  }

  emit(higgsline::to_json(canonical_point(y, pi)));
  return kExitPass;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string pi_path;
  std::uint64_t seed = 0;
  int samples = 0;
  double tol = 0.0;
};

int cmd_verify(const VerifyArgs& args) {
  const std::vector<std::string>& names = higgsline::suite_names();
  if (args.suite != "all" &&
      std::find(names.begin(), names.end(), args.suite) == names.end()) {
    std::cerr << "unknown suite: " << args.suite << "\n";
    return kExitUsage;
  }
  higgsline::VerifyOptions opt;
  opt.seed = args.seed;
  opt.samples = args.samples;
  opt.tol = args.tol;
  if (!args.pi_path.empty())
    opt.pi = higgsline::period_matrix_from_json(read_json(args.pi_path));

  if (args.suite != "all") {
    higgsline::VerificationReport report = higgsline::run_suite(args.suite, opt);
    emit(higgsline::to_json(report));
    return report.pass() ? kExitPass : kExitDomain;
  }
  std::vector<higgsline::VerificationReport> reports = higgsline::run_all(opt);
  bool pass = true;
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    suites.push_back(higgsline::to_json(r));
  }
  emit({{"suite", "all"}, {"seed", args.seed}, {"pass", pass}, {"suites", suites}});
  return pass ? kExitPass : kExitDomain;
}

struct TwistorArgs {
  std::string line_path, transition_path, realstruct_path;
  std::vector<std::string> samples;
  int chart = 1;
};

int cmd_twistor(const TwistorArgs& args) {
  if (!args.line_path.empty()) {
    nlohmann::json j = read_json(args.line_path);
    if (j.is_object() && j.contains("v0")) j = j.at("v0");
    Eigen::VectorXcd v0 = higgsline::cvector_from_json(j);
    if (v0.size() == 0 || v0.size() % 2 != 0)
      throw ParseError("line v0 must have positive even length");
    higgsline::TwistorLine line(v0);
    higgsline::Chart chart = args.chart == 2 ? higgsline::Chart::Two : higgsline::Chart::One;
    nlohmann::json out = nlohmann::json::array();
    for (const std::string& s : args.samples)
      out.push_back(higgsline::to_json(line_eval(line, chart, parse_complex(s))));
    emit({{"samples", out}});
    return kExitPass;
  }
  if (!args.transition_path.empty()) {
    TwistorPoint x = higgsline::twistor_point_from_json(read_json(args.transition_path));
    emit(higgsline::to_json(transition(x)));
    return kExitPass;
  }
  if (!args.realstruct_path.empty()) {
    TwistorPoint x = higgsline::twistor_point_from_json(read_json(args.realstruct_path));
    emit(higgsline::to_json(real_structure(x)));
    return kExitPass;
  }
  throw ParseError("one of --line, --transition, --realstruct is required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-one Higgs bundle moduli: conversions, actions, verification"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  double tol = 0.0;
  app.add_option("--seed", seed, "seed for randomized checks")->envname("HIGGS_SEED");
  app.add_option("--tol", tol, "override default tolerances");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "check a period matrix");
  validate->add_option("path", validate_path, "period matrix JSON (- for stdin)")
      ->required();

  ConvertArgs conv;
  CLI::App* convert = app.add_subcommand("convert", "convert a moduli point");
  convert->add_option("--from", conv.from, "source system")->required();
  convert->add_option("--to", conv.to, "target system")->required();
  convert->add_option("--pi", conv.pi_path, "period matrix JSON")->required();
  convert->add_option("--point", conv.point_path, "moduli point JSON")->required();
  convert->add_flag("--roundtrip", conv.roundtrip, "also report roundtrip residual");

  ActArgs act;
  CLI::App* actc = app.add_subcommand("act", "apply an action or flow to a point");
  actc->add_option("--pi", act.pi_path, "period matrix JSON")->required();
  actc->add_option("--point", act.point_path, "moduli point JSON")->required();
  actc->add_option("--cstar", act.cstar, "scale the Higgs field by lambda");
  actc->add_option("--flow", act.flow, "Hamiltonian flow n,t");
  actc->add_option("--gradient", act.gradient, "downward gradient flow for time t");
  actc->add_option("--iota", act.iota, "real structure: U or R");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", ver.suite, "suite name or all");
  verify->add_option("--pi", ver.pi_path, "pin a period matrix");
  verify->add_option("--samples", ver.samples, "override per-check sample counts");

  TwistorArgs tw;
  CLI::App* twistor = app.add_subcommand("twistor", "probe twistor space");
  twistor->add_option("--line", tw.line_path, "JSON with fiber-zero coordinate v0");
  twistor->add_option("--sample", tw.samples, "base point to sample the line at");
  twistor->add_option("--chart", tw.chart, "chart for --line sampling (1 or 2)");
  twistor->add_option("--transition", tw.transition_path, "twistor point JSON");
  twistor->add_option("--realstruct", tw.realstruct_path, "twistor point JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(validate_path);
    if (app.got_subcommand(convert)) return cmd_convert(conv);
    if (app.got_subcommand(actc)) return cmd_act(act);
    if (app.got_subcommand(verify)) {
      ver.seed = seed;
      ver.tol = tol;
      return cmd_verify(ver);
    }
    if (app.got_subcommand(twistor)) return cmd_twistor(tw);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
