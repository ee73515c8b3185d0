// Compares the serial reference paths against the OpenMP kernels for the
// two compute cores: lattice enumeration and oracle subgroup closure.

#include <chrono>
#include <cstdio>
#include <set>

#include "fgl/lattice.hpp"
#include "fgl/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fgl;
using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

void bench_enumerate(const PGroupType& t, int jobs) {
  auto t0 = clk::now();
  auto serial = enumerate(t, 1);
  double ts = seconds_since(t0);
  t0 = clk::now();
  auto parallel = enumerate(t, jobs);
  double tp = seconds_since(t0);
  std::printf("enumerate %-14s  %7zu matrices  serial %7.3fs  parallel(%d) "
              "%7.3fs  speedup %.2fx  %s\n",
              t.label().c_str(), serial.size(), ts, jobs, tp, ts / tp,
              serial == parallel ? "match" : "MISMATCH");
}

void bench_oracle(const std::vector<long>& moduli, int jobs) {
  std::string label;
  for (size_t i = 0; i < moduli.size(); ++i)
    label += (i ? " x " : "") + std::to_string(moduli[i]);
  ExplicitGroup g{moduli};
  auto t0 = clk::now();
  auto serial = all_subgroups(g, g.order(), 1);
  double ts = seconds_since(t0);
  t0 = clk::now();
  auto parallel = all_subgroups(g, g.order(), jobs);
  double tp = seconds_since(t0);
  std::set<std::vector<Element>> a, b;
  for (const auto& h : serial) a.insert(h.members);
  for (const auto& h : parallel) b.insert(h.members);
  std::printf("closure   %-14s  %7zu subgroups serial %7.3fs  parallel(%d) "
              "%7.3fs  speedup %.2fx  %s\n",
              label.c_str(), serial.size(), ts, jobs, tp, ts / tp,
              a == b ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  int jobs = 1;
#ifdef _OPENMP
  jobs = omp_get_max_threads();
#endif
  bench_enumerate(PGroupType{2, {2, 3, 4}}, jobs);
  bench_enumerate(PGroupType{3, {1, 2, 3}}, jobs);
  bench_enumerate(PGroupType{2, {1, 2, 2, 3}}, jobs);
  bench_oracle({8, 16}, jobs);
  bench_oracle({3, 9, 27}, jobs);
  bench_oracle({2, 4, 4, 4}, jobs);
  return 0;
}
