// kmroot-bench — compares the OpenMP kernels against their serial references:
// the norm-2 height-box scan and the hyperbolic diagram enumerator.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kmroot/catalog.hpp"
#include "kmroot/lattice.hpp"
#include "kmroot/threads.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double best_of(int reps, F&& body) {
  double best = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    body();
    const double ms = ms_since(t0);
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

void report(const char* label, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", label,
              serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              equal ? "outputs match" : "OUTPUT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  omp_set_num_threads(kmroot::effective_threads());
#endif

  int height = 12;
  int rank = 10;
  int reps = 3;
  CLI::App app{"Benchmark the parallel kernels against their serial references"};
  app.add_option("--height", height, "box-scan height bound (default 12)");
  app.add_option("--rank", rank, "enumeration rank (default 10)");
  app.add_option("--reps", reps, "repetitions, best-of (default 3)");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", kmroot::effective_threads());

  const kmroot::Gcm e10 = kmroot::get("E10").gcm;

  std::vector<std::vector<kmroot::Int>> scan_serial, scan_parallel;
  const double t_scan_s =
      best_of(reps, [&] { scan_serial = kmroot::norm2_box_scan_serial(e10, height); });
  const double t_scan_p =
      best_of(reps, [&] { scan_parallel = kmroot::norm2_box_scan_parallel(e10, height); });
  report("norm-2 box scan", t_scan_s, t_scan_p, scan_serial == scan_parallel);
  std::printf("  %zu vectors at height <= %d\n", scan_serial.size(), height);

  std::vector<kmroot::DynkinDiagram> enum_serial, enum_parallel;
  const double t_enum_s = best_of(
      reps, [&] { enum_serial = kmroot::enumerate_hyperbolic_simply_laced(rank, false); });
  const double t_enum_p = best_of(
      reps, [&] { enum_parallel = kmroot::enumerate_hyperbolic_simply_laced(rank, true); });
  report("hyperbolic enumeration", t_enum_s, t_enum_p, enum_serial == enum_parallel);
  std::printf("  %zu diagrams at rank %d\n", enum_serial.size(), rank);

  return (scan_serial == scan_parallel && enum_serial == enum_parallel) ? 0 : 1;
}
