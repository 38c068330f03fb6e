// Times the serial reference enumeration against the OpenMP kernel and
// verifies they produce identical record lists.

#include <chrono>
#include <cstdio>

#include "tmc/enumerate.hpp"

namespace {

double time_run(int genus_max, bool parallel, std::vector<tmc::CurveRecord>& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = tmc::enumerate_x0(genus_max, parallel);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_genus = argc > 1 ? std::atoi(argv[1]) : 1;
  std::printf("workers: %d\n", tmc::worker_count());
  std::printf("%-8s %-10s %-10s %-9s %s\n", "genus<=", "serial(s)", "openmp(s)", "speedup",
              "records");
  for (int g = 0; g <= max_genus; ++g) {
    std::vector<tmc::CurveRecord> serial, parallel;
    double ts = time_run(g, false, serial);
    double tp = time_run(g, true, parallel);
    if (!(serial == parallel)) {
      std::printf("genus<=%d: serial and parallel outputs differ\n", g);
      return 2;
    }
    std::printf("%-8d %-10.3f %-10.3f %-9.2f %zu\n", g, ts, tp, ts / tp, serial.size());
  }
  return 0;
}
