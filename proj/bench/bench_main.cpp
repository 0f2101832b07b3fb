// Compares the OpenMP reconstruction kernel against the serial reference on
// progressively larger random graphs, and times the head-partition memo.
// Results are wall-clock medians; bit-identity of the two kernels is checked
// on every size.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "admg/binary_param.hpp"
#include "admg/oracle.hpp"

using admg::Admg;
using admg::JointTable;
using admg::MobiusContext;
using admg::MobiusParams;

namespace {

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

template <typename Fn>
double median_ms(int reps, Fn&& fn) {
  std::vector<double> times;
  for (int r = 0; r < reps; ++r) {
    double t0 = now_ms();
    fn();
    times.push_back(now_ms() - t0);
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

int main() {
  std::printf("%-4s %-10s %-12s %-14s %-12s %s\n", "n", "heads", "context_ms", "serial_ms",
              "parallel_ms", "identical");
  for (int n = 6; n <= 12; n += 2) {
    admg::RandomSpec spec;
    spec.n = n;
    spec.p_directed = 0.25;
    spec.p_bidirected = 0.25;
    spec.seed = 1234u + static_cast<std::uint64_t>(n);
    Admg g = admg::random_admg(spec);

    double t0 = now_ms();
    MobiusContext ctx(g);
    double context_ms = now_ms() - t0;

    MobiusParams params = admg::sample_valid_params(ctx, 99, 0.25);

    JointTable serial(1), parallel(1);
    double serial_ms = median_ms(3, [&] { serial = admg::joint_from_params_serial(ctx, params); });
    double parallel_ms = median_ms(3, [&] { parallel = admg::joint_from_params(ctx, params); });

    bool identical = true;
    for (std::uint32_t i = 0; i < serial.assignment_count(); ++i)
      if (serial[i] != parallel[i]) identical = false;

    std::printf("%-4d %-10zu %-12.2f %-14.2f %-12.2f %s\n", n, ctx.heads().size(), context_ms,
                serial_ms, parallel_ms, identical ? "yes" : "NO");
  }
  return 0;
}
