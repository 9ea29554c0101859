// Wall-clock comparison of the OpenMP kernels against the serial reference.
// Each case also checks that the two modes agree bitwise.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <omp.h>

#include "awtaylor/bounds.hpp"
#include "awtaylor/qcore.hpp"
#include "awtaylor/qseries.hpp"
#include "awtaylor/quadrature.hpp"
#include "awtaylor/taylor.hpp"

using namespace awt;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

bool same(cplx a, cplx b) { return std::memcmp(&a, &b, sizeof a) == 0; }

void row(const char* name, double ts, double tp, bool identical) {
  std::printf("%-28s serial %10.3f ms  parallel %10.3f ms  speedup %6.2fx  %s\n", name, 1e3 * ts, 1e3 * tp, ts / tp,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
  int mismatches = 0;

  {  // fixed large circle rule on an expensive integrand
    const ComplexFn g = [](cplx y) { return q_pochhammer_inf(y, 0.9) / (y - cplx(0.3, 0.1)); };
    cplx vs, vp;
    const double ts = seconds([&] { vs = circle_sum(g, 0.0, 2.0, 1 << 15, Exec::serial); }, reps);
    const double tp = seconds([&] { vp = circle_sum(g, 0.0, 2.0, 1 << 15, Exec::parallel); }, reps);
    row("circle_sum 32768 nodes", ts, tp, same(vs, vp));
    mismatches += !same(vs, vp);
  }
  {  // imaginary-axis integral of the q-Vandermonde remainder
    VerifyOptions os, op;
    os.exec = Exec::serial;
    op.exec = Exec::parallel;
    VerificationReport rs, rp;
    const double ts = seconds([&] { rs = verify_q_vandermonde_nonsym(0.3, 0.8, -1.0, -0.5, 0.5, os); }, reps);
    const double tp = seconds([&] { rp = verify_q_vandermonde_nonsym(0.3, 0.8, -1.0, -0.5, 0.5, op); }, reps);
    row("axis integral (vandermonde)", ts, tp, same(rs.rhs, rp.rhs));
    mismatches += !same(rs.rhs, rp.rhs);
  }
  {  // growth-bound sweeps
    UpperBoundSweep us, up;
    const double ts = seconds([&] { us = sweep_upper_bound(0.5, 200000, 10.0, 7, Exec::serial); }, reps);
    const double tp = seconds([&] { up = sweep_upper_bound(0.5, 200000, 10.0, 7, Exec::parallel); }, reps);
    const bool ok = us.violations == up.violations && us.worst_log_margin == up.worst_log_margin;
    row("upper bound sweep 2e5", ts, tp, ok);
    mismatches += !ok;
  }
  {
    LowerRatioSweep ls, lp;
    const std::vector<double> radii = {10.0, 100.0, 1000.0};
    const double ts = seconds([&] { ls = sweep_lower_ratio(0.5, 0.3, 0.1, radii, 200000, 7, Exec::serial); }, reps);
    const double tp = seconds([&] { lp = sweep_lower_ratio(0.5, 0.3, 0.1, radii, 200000, 7, Exec::parallel); }, reps);
    const bool ok = ls.overall_infimum == lp.overall_infimum && ls.spread == lp.spread;
    row("lower ratio sweep 2e5", ts, tp, ok);
    mismatches += !ok;
  }
  return mismatches == 0 ? 0 : 1;
}
