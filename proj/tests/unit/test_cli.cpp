#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using stringvac::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::ofstream f(name, std::ios::binary);
  f << text;
  return name;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("phi2 at the equator") {
  const auto r = invoke({"phi2", "--theta", "1.5707963", "--alpha", "1", "--mass", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value_closed"].get<double>() == doctest::Approx(5.2771449813717591e-4).epsilon(1e-12));
  CHECK(j["route_agreement"].get<double>() < 1e-8);
  const auto half = nlohmann::json::parse(
      invoke({"phi2", "--theta", "1.5707963267948966", "--alpha", "0.5", "--format", "json"}).out);
  CHECK(half["value_closed"].get<double>() == doctest::Approx(4 * j["value_closed"].get<double>()).epsilon(1e-12));
}

TEST_CASE("phi2 at the pole is a numeric error naming the divergence") {
  const auto r = invoke({"phi2", "--theta", "0"});
  CHECK(r.code == 3);
  CHECK(r.err.find("DomainError") != std::string::npos);
  CHECK(r.err.find("pol") != std::string::npos);
}

TEST_CASE("config errors exit with 2") {
  CHECK(invoke({"--tolerance", "1e-2", "phi2"}).code == 2);
  CHECK(invoke({"--format", "xml", "phi2"}).code == 2);
  CHECK(invoke({"--parallelism", "0", "verify"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify", "--manifest", "/nonexistent.yaml"}).code == 2);
  const auto m = write_temp("cli_unknown_key.yaml", "cases:\n  - identity: heine_classic\n    bogus: 1\n");
  const auto r = invoke({"verify", "--manifest", m});
  CHECK(r.code == 2);
  CHECK(r.err.find("cli_unknown_key.yaml:3: unknown key 'bogus'") != std::string::npos);
  std::remove(m.c_str());
}

TEST_CASE("verify: Linet at alpha = 0.4 is an error record with its own exit code") {
  const auto m = write_temp("cli_linet.yaml",
                            "cases:\n  - identity: linet\n    params: {alpha: 0.4, theta: 1, theta_p: 2, dphi: 1}\n"
                            "  - identity: heine_classic\n    params: {zeta: 2, psi: 0}\n");
  const auto r = invoke({"verify", "--manifest", m});
  CHECK(r.code == 3);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["records"][0]["status"] == "error");
  CHECK(j["records"][0]["error_kind"] == "DomainError");
  CHECK(j["records"][1]["status"] == "passed");
  std::remove(m.c_str());
}

TEST_CASE("verify: failures exit with 1") {
  const auto m = write_temp("cli_fail.yaml",
                            "cases:\n  - identity: heine_classic\n    lmax: 3\n    params: {zeta: 1.1, psi: 0.9}\n");
  const auto r = invoke({"verify", "--manifest", m});
  CHECK(r.code == 1);
  CHECK(r.err.find("FAIL heine_classic") != std::string::npos);
  std::remove(m.c_str());
}

TEST_CASE("verify: empty manifest passes with a warning") {
  const auto m = write_temp("cli_empty.yaml", "version: 1\ncases: []\n");
  const auto r = invoke({"verify", "--manifest", m, "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  std::remove(m.c_str());
}

TEST_CASE("verify output is byte-identical across runs and thread counts") {
  const auto m = write_temp("cli_det.yaml",
                            "cases:\n  - identity: app5\n    grid: {alpha: [1, 0.75], m: [0, 1], theta: [1.0], theta_p: [2.0]}\n"
                            "  - identity: norm_integral\n    tol: 1e-8\n    grid: {alpha: [0.5], m: [1], l: [1, 2], l_p: [1, 2]}\n");
  const auto a = invoke({"verify", "--manifest", m, "--out", "cli_det_a.json"});
  const auto b = invoke({"verify", "--manifest", m, "--out", "cli_det_b.json", "--parallelism", "4"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out.empty());
  const auto ja = slurp("cli_det_a.json");
  CHECK(!ja.empty());
  CHECK(ja == slurp("cli_det_b.json"));
  for (const char* f : {"cli_det.yaml", "cli_det_a.json", "cli_det_b.json"}) std::remove(f);
}

TEST_CASE("figure1 CSV") {
  const auto r = invoke({"figure1"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("cos_theta,alpha,phi2_M2\n"));
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 4 * 201);
  CHECK(r.out.find("\n0,1,0.000527714498137") != std::string::npos);
  const auto small = invoke({"figure1", "--alpha", "0.8", "--alpha", "0.6", "--points", "11"});
  CHECK(std::count(small.out.begin(), small.out.end(), '\n') == 1 + 2 * 11);
  CHECK(invoke({"figure1", "--alpha", "1.5"}).code == 3);
}

TEST_CASE("radial") {
  const auto a = invoke({"radial", "--n", "1", "--l", "0", "--m", "0", "--alpha", "1", "--format", "json"});
  CHECK(a.code == 0);
  const auto ja = nlohmann::json::parse(a.out);
  CHECK(std::abs(ja["exponent_p"].get<double>() - 0.5) < 1e-3);
  const auto b = invoke({"radial", "--n", "3", "--l", "2", "--m", "1", "--alpha", "0.5", "--format", "json"});
  CHECK(b.code == 0);
  const auto jb = nlohmann::json::parse(b.out);
  CHECK(jb["lambda"].get<double>() == 3.0);
  CHECK(std::abs(jb["exponent_p"].get<double>() - 1.5) < 1e-3);
  const auto c = invoke({"radial", "--n", "0", "--l", "2"});
  CHECK(c.code == 0);
  CHECK(c.out.find("eta,P,Q,jump_ratio") != std::string::npos);
  CHECK(c.out.find("# branch = \"legendre\"") != std::string::npos);
  CHECK(invoke({"radial", "--n", "1", "--l", "1", "--m", "2"}).code == 3);
}

TEST_CASE("help") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
