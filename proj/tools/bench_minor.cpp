/**
 * @file bench_minor.cpp
 * @brief Timing harness for the MDS minor check: the elimination-reuse
 *        kernel (OpenMP) versus the per-subset serial reference.
 *
 * Each case builds the parity-check matrix of one defining set and times one
 * or both implementations on the full C(n, r) enumeration.  The serial
 * reference is only run where it finishes in seconds.
 */

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "eaqmds/verify.hpp"

namespace {

using namespace eaqmds;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct BenchCase {
  i64 q, n, k;
  bool run_serial;
};

}  // namespace

int main() {
  const std::vector<BenchCase> cases = {
      {13, 17, 2, true},  {13, 17, 3, true},  {13, 17, 4, true},
      {17, 29, 3, true},  {17, 29, 5, false},
  };
  const i64 cap = 100'000'000;
  std::printf("%-22s %14s %12s %12s %8s\n", "case", "subsets", "fast[s]",
              "serial[s]", "speedup");
  for (const BenchCase& bc : cases) {
    const CodeContext ctx = make_code_context(bc.q, bc.n);
    const DefiningSet T =
        build_defining_set(make_consecutive_spec(bc.n, bc.q, bc.k));
    const CheckMatrix H = parity_check_matrix(ctx, T);
    const i64 subsets = binom_clamped(H.m.cols, H.m.rows);

    Clock::time_point t0 = Clock::now();
    const MinorVerdict fast = mds_minor_check(H, cap);
    const double fast_s = seconds_since(t0);

    double serial_s = -1.0;
    if (bc.run_serial) {
      t0 = Clock::now();
      const MinorVerdict serial = mds_minor_check_serial(H, cap);
      serial_s = seconds_since(t0);
      if (serial.outcome != fast.outcome) {
        std::printf("MISMATCH on q=%lld n=%lld k=%lld\n",
                    static_cast<long long>(bc.q),
                    static_cast<long long>(bc.n),
                    static_cast<long long>(bc.k));
        return 1;
      }
    }

    char label[64];
    std::snprintf(label, sizeof(label), "q=%lld n=%lld r=%lld",
                  static_cast<long long>(bc.q), static_cast<long long>(bc.n),
                  static_cast<long long>(H.m.rows));
    if (serial_s >= 0)
      std::printf("%-22s %14lld %12.3f %12.3f %7.1fx\n", label,
                  static_cast<long long>(subsets), fast_s, serial_s,
                  serial_s / (fast_s > 0 ? fast_s : 1e-9));
    else
      std::printf("%-22s %14lld %12.3f %12s %8s\n", label,
                  static_cast<long long>(subsets), fast_s, "-", "-");
    if (fast.outcome != MinorOutcome::Mds) {
      std::printf("unexpected verdict (not MDS?) on %s\n", label);
      return 1;
    }
  }
  return 0;
}
