#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string binary_path() {
  const char* env = std::getenv("QSLCHAN_BIN");
  REQUIRE_MESSAGE(env != nullptr, "QSLCHAN_BIN must point at the CLI binary");
  return env;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("").exit_code == 2);                                   // missing subcommand
  CHECK(run("figure fig9").exit_code == 2);                        // unknown figure id
  CHECK(run("qslt --bound pure --alpha 0.5").exit_code == 2);      // missing endpoint
  CHECK(run("evolve --alpha 0.5").exit_code == 2);                 // missing endpoint
  CHECK(run("evolve --alpha 0.5 --concurrence 0.5 --endpoint 0.5").exit_code == 2);
  CHECK(run("evolve --mu 1.5 --alpha 0.5 --endpoint 0.5").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("evolve reports a density matrix with a clean cross-check") {
  const RunResult r =
      run("evolve --family pd --mu 1 --alpha 0.7071067811865476 --endpoint 0.5");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["trace"].get<double>() - 1.0) < 1e-12);
  CHECK(j["kraus_discrepancy"].get<double>() < 1e-12);
  // fully correlated dephasing preserves the coherence
  CHECK(std::abs(j["matrix"]["real"][0][3].get<double>() - 0.5) < 1e-9);
}

TEST_CASE("qslt pure reports the closed-form oracle next to the value") {
  const RunResult r =
      run("qslt --bound pure --family depol --mu 1 --alpha 0.6 --endpoint 0.5");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["value"].get<double>() - 0.28) < 1e-6);
  CHECK(std::abs(j["oracle_value"].get<double>() - 0.28) < 1e-9);
}

TEST_CASE("qslt mixed matches the dephasing closed form") {
  const RunResult r = run(
      "qslt --bound mixed --family pd --mu 0.3 --alpha 0.7071067811865476 "
      "--tau 0 --tau-d 1 --rate 0.5");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["value"].get<double>() - 1.0) < 1e-4);
}

TEST_CASE("stationary pure query exits 0 with a null value") {
  const RunResult r = run("qslt --bound pure --family pd --mu 1 --alpha 0.5 --endpoint 0.3");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["stationary"].get<bool>());
  CHECK(j["value"].is_null());
}

TEST_CASE("scan emits a bracketed critical value") {
  const RunResult r = run("scan --critical p_tau_c --c 0.6 --mu 1");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["exists"].get<bool>());
  CHECK(std::abs(j["value"].get<double>() - 0.332940) < 5e-3);
}

TEST_CASE("figure output is byte-identical across runs") {
  const RunResult a = run("figure fig4 --points 25");
  const RunResult b = run("figure fig4 --points 25");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("tau,mu_0,mu_0.3,mu_0.6,mu_1", 0) == 0);

  const RunResult serial = run("figure fig4 --points 25 --serial");
  CHECK(serial.out == a.out);
}

TEST_CASE("figure can render SVG") {
  const RunResult r = run("figure fig3 --points 12 --format svg");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("polyline") != std::string::npos);
}

TEST_CASE("validate passes on a clean build and fails under fault injection") {
  CHECK(run("validate").exit_code == 0);
  CHECK(run("validate --inject-kraus-defect").exit_code == 1);
}
