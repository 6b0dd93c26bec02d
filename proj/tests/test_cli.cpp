// End-to-end tests driving the installed CLI binary through popen.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "higgsline/json_io.hpp"

namespace {

struct CommandResult {
  int exit_code;
  std::string out;
};

CommandResult run_command(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(HIGGSLINE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) {
  return std::string(HIGGSLINE_DATA_DIR) + "/" + name;
}

std::string temp_point(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("validate accepts the square torus") {
  CommandResult r = run_command("validate " + data("pi_i.json"));
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("valid") == true);
  CHECK(j.at("k") == 1);
}

TEST_CASE("validate rejects an asymmetric matrix with exit 1") {
  CommandResult r = run_command("validate " + data("pi_asymmetric.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("NotSymmetric") != std::string::npos);
}

TEST_CASE("validate rejects malformed JSON with exit 2") {
  CommandResult r = run_command("validate " + data("pi_bad.json"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("convert sends the trivial representation to the origin") {
  CommandResult r = run_command("convert --from betti --to dolbeault --pi " +
                                data("pi_i.json") + " --point " + data("betti_trivial.json"));
  REQUIRE(r.exit_code == 0);
  auto z = std::get<higgsline::DolbeaultPoint>(
      higgsline::moduli_point_from_json(nlohmann::json::parse(r.out)));
  CHECK(std::abs(z.q[0]) < 1e-12);
  CHECK(std::abs(z.p[0]) < 1e-12);
}

TEST_CASE("convert derham (2,0) over the square torus") {
  CommandResult r = run_command("convert --from derham --to dolbeault --pi " +
                                data("pi_i.json") + " --point " + data("derham_2_0.json"));
  REQUIRE(r.exit_code == 0);
  auto z = std::get<higgsline::DolbeaultPoint>(
      higgsline::moduli_point_from_json(nlohmann::json::parse(r.out)));
  CHECK(std::abs(z.q[0]) < 1e-12);
  CHECK(std::abs(z.p[0] - 1.0) < 1e-12);
}

TEST_CASE("convert --roundtrip reports a tiny residual") {
  CommandResult r = run_command("convert --from derham --to betti --roundtrip --pi " +
                                data("pi_i.json") + " --point " + data("derham_2_0.json"));
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("roundtrip_residual").get<double>() < 1e-9);
}

TEST_CASE("convert rejects a point whose system disagrees with --from") {
  CommandResult r = run_command("convert --from derham --to dolbeault --pi " +
                                data("pi_i.json") + " --point " + data("betti_trivial.json"));
  CHECK(r.exit_code == 1);
}

TEST_CASE("convert rejects a malformed point file with exit 2") {
  CommandResult r = run_command("convert --from derham --to dolbeault --pi " +
                                data("pi_i.json") + " --point " + data("pi_bad.json"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("act --cstar 1 is the identity") {
  CommandResult r = run_command("act --cstar 1 --pi " + data("pi_i.json") + " --point " +
                                data("dolbeault_01.json"));
  REQUIRE(r.exit_code == 0);
  auto z = std::get<higgsline::DolbeaultPoint>(
      higgsline::moduli_point_from_json(nlohmann::json::parse(r.out)));
  CHECK(std::abs(z.q[0]) < 1e-12);
  CHECK(std::abs(z.p[0] - 1.0) < 1e-12);
}

TEST_CASE("act --cstar i rotates the log-period pair (1,0) to (0,-1)") {
  // In de Rham coordinates over Pi = [i] that is (a, b) = ((2), (0)) -> ((0), (-2)).
  CommandResult r = run_command("act --cstar i --pi " + data("pi_i.json") + " --point " +
                                data("derham_2_0.json"));
  REQUIRE(r.exit_code == 0);
  auto d = std::get<higgsline::DeRhamPoint>(
      higgsline::moduli_point_from_json(nlohmann::json::parse(r.out)));
  CHECK(std::abs(d.a[0]) < 1e-12);
  CHECK(std::abs(d.b[0] - higgsline::Complex(-2.0, 0.0)) < 1e-12);
}

TEST_CASE("act --iota U applied twice is the identity") {
  std::string first = "act --iota U --pi " + data("pi_i.json") + " --point " +
                      data("dolbeault_01.json");
  CommandResult r1 = run_command(first);
  REQUIRE(r1.exit_code == 0);
  std::string mid = temp_point("higgsline_cli_iota.json", r1.out);
  CommandResult r2 = run_command("act --iota U --pi " + data("pi_i.json") + " --point " + mid);
  REQUIRE(r2.exit_code == 0);
  auto z = std::get<higgsline::DolbeaultPoint>(
      higgsline::moduli_point_from_json(nlohmann::json::parse(r2.out)));
  CHECK(std::abs(z.q[0]) < 1e-12);
  CHECK(std::abs(z.p[0] - 1.0) < 1e-12);
}

TEST_CASE("verify --suite quaternion passes") {
  CommandResult r = run_command("verify --suite quaternion");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("suite") == "quaternion");
}

TEST_CASE("verify is byte-identical under a fixed seed") {
  std::string args = "--seed 123 verify --suite quaternion";
  CommandResult r1 = run_command(args);
  CommandResult r2 = run_command(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("verify honors HIGGS_SEED from the environment") {
  CommandResult r = run_command("verify --suite quaternion", "HIGGS_SEED=9");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("seed") == 9);
}

TEST_CASE("verify rejects an unknown suite with exit 2") {
  CommandResult r = run_command("verify --suite nosuchsuite");
  CHECK(r.exit_code == 2);
}

TEST_CASE("twistor --line samples the tautological line") {
  CommandResult r =
      run_command("twistor --line " + data("line_10.json") + " --sample i --chart 1");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  higgsline::TwistorPoint x = higgsline::twistor_point_from_json(j.at("samples").at(0));
  CHECK(x.chart == higgsline::Chart::One);
  CHECK(std::abs(x.base - higgsline::Complex(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(x.v[0] - 1.0) < 1e-12);
  CHECK(std::abs(x.v[1] - 1.0) < 1e-12);
}

TEST_CASE("twistor --transition halves the fiber at base 2") {
  CommandResult r = run_command("twistor --transition " + data("twistor_z2.json"));
  REQUIRE(r.exit_code == 0);
  higgsline::TwistorPoint x =
      higgsline::twistor_point_from_json(nlohmann::json::parse(r.out));
  CHECK(x.chart == higgsline::Chart::Two);
  CHECK(std::abs(x.base - 0.5) < 1e-12);
  CHECK(std::abs(x.v[0] - higgsline::Complex(0.15, 0.05)) < 1e-12);
  CHECK(std::abs(x.v[1] - higgsline::Complex(-0.1, 0.35)) < 1e-12);
}

TEST_CASE("twistor --realstruct applied twice is the identity") {
  CommandResult r1 = run_command("twistor --realstruct " + data("twistor_z2.json"));
  REQUIRE(r1.exit_code == 0);
  std::string mid = temp_point("higgsline_cli_realstruct.json", r1.out);
  CommandResult r2 = run_command("twistor --realstruct " + mid);
  REQUIRE(r2.exit_code == 0);
  higgsline::TwistorPoint x =
      higgsline::twistor_point_from_json(nlohmann::json::parse(r2.out));
  CHECK(x.chart == higgsline::Chart::One);
  CHECK(std::abs(x.base - 2.0) < 1e-12);
  CHECK(std::abs(x.v[0] - higgsline::Complex(0.3, 0.1)) < 1e-12);
  CHECK(std::abs(x.v[1] - higgsline::Complex(-0.2, 0.7)) < 1e-12);
}

TEST_CASE("missing subcommand exits with usage error") {
  CommandResult r = run_command("");
  CHECK(r.exit_code == 2);
}
