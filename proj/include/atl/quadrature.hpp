#pragma once

#include <functional>

namespace atl {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

// Adaptive Gauss-Kronrod (15/31) on a finite interval. Throws ConvergenceError
// when the error estimate stays above rel_tol * max(L1 norm, abs_floor).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_floor = 1e-15);

}  // namespace atl
