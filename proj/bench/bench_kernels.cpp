// Serial reference vs OpenMP lattice kernels and genus sweep.
//   bench_kernels [repeats]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "atl/genus_bounds.hpp"
#include "atl/kernels/lattice_sum.hpp"
#include "atl/kernels/sweep.hpp"

namespace k = atl::kernels;

namespace {

template <class F>
double best_of(int repeats, F&& f, double& result) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    result = f();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

void compare(const char* name, int repeats, const std::function<double()>& serial,
             const std::function<double()>& parallel) {
  double rs = 0.0;
  double rp = 0.0;
  const double ts = best_of(repeats, serial, rs);
  const double tp = best_of(repeats, parallel, rp);
  const double rel = rs != 0.0 ? std::abs(rp - rs) / std::abs(rs) : std::abs(rp);
  std::printf("%-26s serial %9.4f s  openmp %9.4f s  speedup %5.2fx  rel.diff %.2e\n", name, ts,
              tp, ts / tp, rel);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);

  const k::LatticeForm square{0.0, 1.0, 1.0};
  const k::LatticeForm skew{0.31, 0.47, 1.0};
  const double qmax = 4e6;

  compare("exp_sum square", repeats,
          [&] { return k::serial::exp_sum(square, 1e-5, qmax); },
          [&] { return k::parallel::exp_sum(square, 1e-5, qmax); });
  compare("exp_sum skew", repeats,
          [&] { return k::serial::exp_sum(skew, 1e-5, qmax); },
          [&] { return k::parallel::exp_sum(skew, 1e-5, qmax); });
  compare("power_sum s=2 skew", repeats,
          [&] { return k::serial::power_sum(skew, 2.0, qmax); },
          [&] { return k::parallel::power_sum(skew, 2.0, qmax); });
  compare("count_below skew", repeats,
          [&] { return static_cast<double>(k::serial::count_below(skew, qmax)); },
          [&] { return static_cast<double>(k::parallel::count_below(skew, qmax)); });

  // A predicate that never fails forces both sweeps to visit every genus.
  auto holds = [](long g) {
    const int gi = static_cast<int>(g);
    return atl::upper_bound_logdet(gi).upper_exact > -atl::asymptotic_line(g);
  };
  compare("genus sweep to 1e6", repeats,
          [&] { return static_cast<double>(k::serial::first_violation(2, 1'000'000, holds).value_or(0)); },
          [&] { return static_cast<double>(k::parallel::first_violation(2, 1'000'000, holds).value_or(0)); });
  return 0;
}
