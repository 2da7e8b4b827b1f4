#include "atl/quadrature.hpp"

#include <algorithm>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "atl/errors.hpp"

namespace atl {

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_floor) {
  constexpr unsigned max_depth = 20;
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, max_depth, rel_tol, &error, &l1);
  const double budget = rel_tol * std::max(l1, abs_floor);
  // The estimator is pessimistic for smooth integrands; allow one decade of slack.
  if (!(error <= 10.0 * budget)) {
    std::ostringstream os;
    os << "adaptive quadrature on [" << a << ", " << b << "] stalled: error estimate " << error
       << " exceeds " << 10.0 * budget;
    throw ConvergenceError(os.str());
  }
  return {value, error};
}

}  // namespace atl
