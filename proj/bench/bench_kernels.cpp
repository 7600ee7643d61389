// Compares the serial reference implementations against the OpenMP kernels
// on the three hot paths: order-matrix construction, total-semimodularity
// sweeps, and interval-by-interval homology.  Run with no arguments.

#include <chrono>
#include <cstdio>

#include "ppos/homology.hpp"
#include "ppos/poset.hpp"

using namespace ppos;

static double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <class Fn>
static double timed(Fn fn) {
  double t0 = now();
  fn();
  return now() - t0;
}

static void report(const char* label, double ts, double tp) {
  std::printf("%-36s serial %8.3fs  parallel %8.3fs  speedup %.2fx\n", label, ts,
              tp, tp > 0 ? ts / tp : 0.0);
}

int main() {
  std::printf("worker threads: %d\n", thread_count(Exec::parallel));

  {
    FamilySpec spec;
    spec.family = Family::A;
    spec.n = 7;
    double ts = timed([&] { family_poset(spec, Exec::serial); });
    double tp = timed([&] { family_poset(spec, Exec::parallel); });
    report("order matrix, A n=7", ts, tp);
  }
  {
    FamilySpec spec;
    spec.family = Family::A_fixed;
    spec.n = 6;
    spec.i = 1;
    FinitePoset P = family_poset(spec, Exec::parallel);
    double ts = timed([&] { is_totally_semimodular(P, Exec::serial); });
    double tp = timed([&] { is_totally_semimodular(P, Exec::parallel); });
    report("total semimodularity, A_fixed n=6", ts, tp);
  }
  {
    FamilySpec spec;
    spec.family = Family::A_fixed;
    spec.n = 5;
    spec.i = 1;
    FinitePoset P = family_poset(spec, Exec::parallel);
    double ts = timed([&] { cohen_macaulay_report(P, Exec::serial, false); });
    double tp = timed([&] { cohen_macaulay_report(P, Exec::parallel, false); });
    report("interval homology sweep, A_fixed n=5", ts, tp);
  }
  return 0;
}
