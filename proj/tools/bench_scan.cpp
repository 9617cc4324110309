// Compares the serial and OpenMP residue-scan kernels on the larger groups.
#include <chrono>
#include <iostream>
#include <numeric>
#include <vector>

#include "parkspace/groups.hpp"

using namespace parkspace;
using Clock = std::chrono::steady_clock;

namespace {
template <typename F>
double time_ms(F&& f, int reps) {
  auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}
}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  for (const char* name : {"G30", "G34", "G36", "G37"}) {
    auto w = group_data(name);
    long period = 1;
    for (long d : w.degrees) period = std::lcm(period, d);
    std::vector<long> offsets;
    for (long d : w.degrees) offsets.push_back(d - 1);
    std::vector<char> serial, parallel;
    double ts = time_ms(
        [&] { serial = polynomiality_scan_serial(w.degrees, offsets, period, 0); }, reps);
    double tp = time_ms(
        [&] { parallel = polynomiality_scan_parallel(w.degrees, offsets, period, 0); }, reps);
    bool same = serial == parallel;
    std::cout << name << "  period=" << period << "  serial=" << ts << "ms  parallel=" << tp
              << "ms  agree=" << (same ? "yes" : "NO") << "\n";
    if (!same) return 1;
  }
  return 0;
}
