// Serial reference path against the OpenMP path on the heavy kernels.
// Each row builds from scratch, checks both results are identical and
// reports the best of --repeat timings.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "gdh/cache.hpp"
#include "gdh/gd.hpp"
#include "gdh/kp.hpp"
#include "gdh/witten.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gdh;

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double best_of(int repeat, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

struct Row {
  std::string name;
  std::function<std::string(Execution, int)> run;  // returns a fingerprint of the result
};

std::string fingerprint(const std::vector<GradedSeries>& w) {
  std::string out;
  for (const auto& g : w)
    for (const auto& [k, c] : g.terms()) out += to_string(c) + ";";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel timings"};
  int workers = 0, repeat = 3, kp_weight = 14, gd_weight = 20;
  app.add_option("--workers", workers, "threads for the parallel path (0 = all)");
  app.add_option("--repeat", repeat, "timings per row")->check(CLI::PositiveNumber);
  app.add_option("--kp-weight", kp_weight)->check(CLI::Range(4, 20));
  app.add_option("--gd-weight", gd_weight)->check(CLI::Range(4, 30));
  CLI11_PARSE(app, argc, argv);

  int threads = 1;
#ifdef _OPENMP
  threads = workers > 0 ? workers : omp_get_max_threads();
#endif

  const std::vector<Row> rows{
      {"KP tables to weight " + std::to_string(kp_weight),
       [&](Execution e, int w) {
         KPTable t;
         t.ensure(kp_weight, e, w);
         return serialize_tables(t).dump();
       }},
      {"n=4 tables to weight " + std::to_string(gd_weight),
       [&](Execution e, int w) {
         GDContext t(4);
         t.ensure(gd_weight, e, w);
         return serialize_tables(t).dump();
       }},
      {"n=3 truncation g<=1 k<=5",
       [&](Execution e, int w) {
         GDContext t(3);
         return fingerprint(witten_truncation(t, 1, 5, e, w));
       }},
  };

  std::printf("threads: %d\n", threads);
  std::printf("%-30s %12s %12s %9s  %s\n", "kernel", "serial [s]", "parallel [s]", "speedup",
              "result");
  for (const auto& row : rows) {
    std::string serial_out, parallel_out;
    const double ts = best_of(repeat, [&] { serial_out = row.run(Execution::serial, 0); });
    const double tp =
        best_of(repeat, [&] { parallel_out = row.run(Execution::parallel, workers); });
    std::printf("%-30s %12.3f %12.3f %9.2f  %s\n", row.name.c_str(), ts, tp, ts / tp,
                serial_out == parallel_out ? "identical" : "DIFFERENT");
  }
  return 0;
}
