#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + GDH_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh_dir() {
  std::random_device rd;
  return fs::temp_directory_path() / ("gdh-cli-" + std::to_string(rd()));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("Boussinesq in text") {
  const Run r = run("gd --n 3 --indices 2,2 --format text");
  CHECK(r.code == 0);
  CHECK(r.out == "d2^2 v = -1/3 d1^4 v + 2 (d1^2 v)^2\n");
}

TEST_CASE("lowest KP equation in text") {
  const Run r = run("kp --pair 2,2 --format text");
  CHECK(r.code == 0);
  CHECK(r.out == "d2^2 v = 4/3 d3 d1 v - 1/3 d1^4 v + 2 (d1^2 v)^2\n");
}

TEST_CASE("correlator record") {
  const Run r = run("correlators --n 2 --genus 0 --insertions 1:0,1:0,1:0 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["abs_value"] == nlohmann::json{{"num", "1"}, {"den", "1"}});
  CHECK(j["value"] == nlohmann::json{{"num", "1"}, {"den", "1"}});
  CHECK(j["sign"] == "+");
  CHECK(j["sign_convention"] == "frozen");
  CHECK(j["linear_indices"] == nlohmann::json::parse("[1,1,1]"));
}

TEST_CASE("equation json") {
  const Run r = run("gd --n 4 --indices 2,3 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["lhs"] == nlohmann::json::parse("[2,3]"));
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["monomial"] == nlohmann::json::parse("[[2,3]]"));
  CHECK(j["terms"][0]["coeff"] == nlohmann::json{{"num", "-1"}, {"den", "2"}});
}

TEST_CASE("witten series and residual") {
  Run r = run("witten --n 3 --genus 0 --kmax 4 --format text");
  CHECK(r.code == 0);
  CHECK(r.out == "W^0 = x1^2 x2 - 5/3 x1^3 x5 - 4 x1^2 x2 x4 + 2/3 x2^4\n");
  r = run("witten --n 2 --genus 1 --kmax 4 --residual sign-corrected --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["residual"]["terms"].size() == 1);
  CHECK(j["residual"]["terms"][0]["indices"] == nlohmann::json::parse("[5]"));
}

TEST_CASE("latex output") {
  const Run r = run("gd --n 3 --indices 2,2 --format latex");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "\\partial_{2}^{2} v = -\\frac{1}{3} \\partial^{4} v + 2 "
        "\\left(\\partial^{2} v\\right)^{2}\n");
}

TEST_CASE("usage and domain errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("kp").code == 2);
  CHECK(run("kp --pair 2").code == 2);
  CHECK(run("kp --pair 0,2").code == 2);
  CHECK(run("gd --n 1 --indices 2,2").code == 2);
  CHECK(run("gd --n 3 --indices 2,x").code == 2);
  CHECK(run("kp --pair 2,2 --format yaml").code == 2);
  CHECK(run("correlators --n 2 --genus 0 --insertions 3:0,1:0,1:0").code == 2);
  CHECK(run("correlators --n 2 --genus 0 --insertions 1-0").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("cold and warm cache give identical bytes") {
  const fs::path dir = fresh_dir();
  const std::string args = "--cache " + dir.string() + " gd --n 4 --indices 3,4 --format json";
  const Run cold = run(args);
  const Run warm = run(args);
  const Run plain = run("gd --n 4 --indices 3,4 --format json");
  CHECK(cold.code == 0);
  CHECK(fs::exists(dir / "gd-4.json"));
  CHECK(cold.out == warm.out);
  CHECK(cold.out == plain.out);
  const Run env = run("gd --n 4 --indices 3,4 --format json", "GDH_CACHE=" + dir.string());
  CHECK(env.out == cold.out);
  fs::remove_all(dir);
}

TEST_CASE("worker count does not change output") {
  CHECK(run("--workers 3 witten --n 3 --genus 1 --kmax 4 --format json").out ==
        run("witten --n 3 --genus 1 --kmax 4 --format json").out);
}

TEST_CASE("selfcheck") {
  const Run r = run("selfcheck --max-weight 8");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

}
