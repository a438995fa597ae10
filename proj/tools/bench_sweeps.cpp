// Times the verification sweeps in serial and OpenMP-parallel mode and
// checks that both modes produce the same report.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sbcw/verify.hpp"

namespace {

double run_timed(const std::function<sbcw::Report(sbcw::ExecMode)>& suite, sbcw::ExecMode mode,
                 sbcw::Report& out) {
  auto start = std::chrono::steady_clock::now();
  out = suite(mode);
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-22s %10s %10s %8s  %s\n", "suite", "serial_s", "parallel_s", "speedup",
              "agree");

  struct Entry {
    std::string name;
    std::function<sbcw::Report(sbcw::ExecMode)> run;
  };
  std::vector<Entry> entries = {
      {"main1(depth=15)", [](sbcw::ExecMode m) { return sbcw::verify_main1(15, m); }},
      {"main2(depth=15)", [](sbcw::ExecMode m) { return sbcw::verify_main2(15, m); }},
      {"forms(depth=14)", [](sbcw::ExecMode m) { return sbcw::verify_forms(14, m); }},
      {"int-inc(bound=120)", [](sbcw::ExecMode m) { return sbcw::verify_int_inc(120, m); }},
      {"det(bound=20)", [](sbcw::ExecMode m) { return sbcw::verify_det_law(20, m); }},
      {"christoffel(depth=12)",
       [](sbcw::ExecMode m) { return sbcw::verify_christoffel(12, m); }},
      {"cohn(depth=12)", [](sbcw::ExecMode m) { return sbcw::verify_cohn(12, m); }},
  };

  int bad = 0;
  for (const Entry& e : entries) {
    sbcw::Report serial, parallel;
    double ts = run_timed(e.run, sbcw::ExecMode::serial, serial);
    double tp = run_timed(e.run, sbcw::ExecMode::parallel, parallel);
    bool agree = serial.pass == parallel.pass && serial.checked == parallel.checked &&
                 serial.counterexample == parallel.counterexample;
    if (!agree || !serial.pass) ++bad;
    std::printf("%-22s %10.3f %10.3f %7.2fx  %s\n", e.name.c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0, agree ? (serial.pass ? "yes" : "yes (FAIL)") : "NO");
  }
  return bad == 0 ? 0 : 1;
}
