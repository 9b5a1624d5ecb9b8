// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gdh/cache.hpp"
#include "gdh/checks.hpp"
#include "gdh/render.hpp"

using namespace gdh;
namespace fs = std::filesystem;

namespace {

CheckResult all_of(const std::string& name, const std::vector<CheckResult>& parts) {
  CheckResult out{name, true, ""};
  for (const auto& p : parts) {
    out.passed = out.passed && p.passed;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += p.name + ": " + (p.passed ? "ok" : "FAIL") + " (" + p.detail + ")";
  }
  return out;
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(GDH_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

CheckResult determinism() {
  static const std::vector<std::string> commands{
      "kp --pair 3,4 --format json",
      "kp --pair 2,5 --format text",
      "gd --n 3 --indices 2,2 --format text",
      "gd --n 4 --indices 3,3,2 --format json",
      "gd --n 5 --indices 4,3 --format latex",
      "witten --n 3 --genus 1 --kmax 4 --format json",
      "witten --n 2 --genus 1 --kmax 5 --residual sign-corrected --format text",
      "correlators --n 2 --genus 0 --insertions 1:0,1:0,1:0 --format json",
      "correlators --n 3 --genus 0 --insertions 1:0,1:0,2:0 --format text",
  };
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("gdh-acceptance-" + std::to_string(rd()));
  CheckResult r{"determinism", true, ""};
  int compared = 0;
  for (const auto& c : commands) {
    const CliRun plain1 = cli(c);
    const CliRun plain2 = cli(c);
    const CliRun cold = cli("--cache " + dir.string() + " " + c);
    const CliRun warm = cli("--cache " + dir.string() + " " + c);
    const bool ok = plain1.code == 0 && plain2.code == 0 && cold.code == 0 && warm.code == 0 &&
                    !plain1.out.empty() && plain1.out == plain2.out &&
                    plain1.out == cold.out && cold.out == warm.out;
    compared += 4;
    if (!ok) {
      r.passed = false;
      r.detail += "mismatch or error for '" + c + "'; ";
    }
  }
  // One table per hierarchy touched: kp, n = 2, 3, 4, 5.
  for (const char* name : {"kp.json", "gd-2.json", "gd-3.json", "gd-4.json", "gd-5.json"})
    if (!fs::exists(dir / name)) {
      r.passed = false;
      r.detail += std::string("cache file ") + name + " not written; ";
    }

  // Persist, reload and re-emit every stored equation.
  int keys = 0;
  auto round_trip = [&](Hierarchy& built, Hierarchy& loaded, const std::string& label) {
    save_cache(built, dir / "round-trip");
    const CacheLoad l = load_cache(loaded, dir / "round-trip");
    if (l.status != CacheStatus::loaded) {
      r.passed = false;
      r.detail += label + " did not reload: " + l.reason + "; ";
      return;
    }
    for (const auto& [key, p] : built.pairs()) {
      ++keys;
      if (equation_terms_json(loaded.pair(key.first, key.second)).dump() !=
          equation_terms_json(p).dump()) {
        r.passed = false;
        r.detail += label + " pair differs after reload; ";
      }
    }
  };
  KPTable kp, kp2;
  kp.ensure(12);
  round_trip(kp, kp2, "kp");
  GDContext gd(3), gd2(3);
  gd.ensure(14);
  round_trip(gd, gd2, "n=3");

  fs::remove_all(dir);
  r.detail += std::to_string(keys) + " stored equations re-emitted after reload; ";
  r.detail += std::to_string(compared) + " runs over " + std::to_string(commands.size()) +
              " commands, cold and warm cache";
  return r;
}

struct Criterion {
  int id;
  std::string title;
  std::function<CheckResult()> run;
};

}  // namespace

int main() {
  KPTable kp;
  GDContext kdv(2);

  const std::vector<Criterion> criteria{
      {1, "KP ground truth", [&] { return check_kp_printed(kp); }},
      {2, "GD ground truth", [] { return check_gd_printed(); }},
      {3, "leading-coefficient law", [&] { return check_leading_coefficient(kp, 12); }},
      {4, "KP parity", [&] { return check_kp_parity(kp, 12); }},
      {5, "GD structure", [] { return check_gd_structure({2, 3, 4, 5}, 4); }},
      {6, "padding identity", [] { return check_padding_identity(500, 20261018, 12, 3, 3); }},
      {7, "flow compatibility", [&] { return check_flow_compatibility(kp, 10); }},
      {8, "B-coefficient cross-oracle", [] { return check_b_cross(8); }},
      {9, "string equation",
       [] {
         std::vector<CheckResult> parts;
         for (int n : {2, 3, 4}) {
           GDContext ctx(n);
           parts.push_back(check_string_equation(ctx, 1, 5, StringForm::printed));
         }
         return all_of("string equation", parts);
       }},
      {10, "correlator oracle", [&] { return check_correlator_oracle(kdv, 4); }},
      {11, "small phase",
       [] {
         std::vector<CheckResult> parts;
         for (int n : {2, 3, 4}) {
           GDContext ctx(n);
           parts.push_back(check_small_phase(ctx));
         }
         return all_of("small phase", parts);
       }},
      {12, "determinism and cache round-trip", [] { return determinism(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {c.title, false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.passed) ++failed;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (r.passed ? "PASS" : "FAIL") << "  criterion " << c.id << "  "
         << c.title << "  [" << secs << " s]  " << r.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
