#include "atl/elliptic_arakelov.hpp"

#include <cmath>

#include "atl/genus_bounds.hpp"

namespace atl {

namespace {
using constants::log_two_pi;
using constants::pi;

// Below this height the q-product is read off the reduced eta value instead of
// being summed directly (|q| = e^{-pi} ~ 0.043 at the switch).
constexpr double kDirectProductMinY = 0.5;
}  // namespace

double log_arakelov_area(const UpperHalfPoint& tau, const Precision& prec) {
  return log_two_pi + std::log(tau.y()) + 2.0 * log_abs_eta(tau, prec);
}

double arakelov_area(const UpperHalfPoint& tau, const Precision& prec) {
  return std::exp(log_arakelov_area(tau, prec));
}

double arakelov_logdet(const UpperHalfPoint& tau, const Precision& prec) {
  return log_two_pi + 2.0 * std::log(tau.y()) + 6.0 * log_abs_eta(tau, prec);
}

double d_ar_elliptic(const UpperHalfPoint& tau, const Precision& prec) {
  return std::log(tau.y()) + 4.0 * log_abs_eta(tau, prec);
}

double elliptic_upper_bound_log(const UpperHalfPoint& tau) {
  const double y = tau.y();
  return log_two_pi + 2.0 * std::log(y) - pi * y / 2.0 + 3.0 / (pi * y);
}

double elliptic_upper_bound_log_statement(const UpperHalfPoint& tau) {
  const double y = tau.y();
  return log_two_pi + 2.0 * std::log(y) - pi * y / 2.0 + 6.0 / (pi * y);
}

QProductBound qprod_bound(const UpperHalfPoint& tau, const Precision& prec) {
  QProductBound out;
  if (tau.y() >= kDirectProductMinY) {
    out.lhs = log_abs_q_product(tau, prec.series_tail_tol);
  } else {
    out.lhs = log_abs_eta(tau, prec) + pi * tau.y() / 12.0;
  }
  // |q| / (1 - |q|) = 1 / (e^{2 pi y} - 1)
  out.rhs = 1.0 / std::expm1(2.0 * pi * tau.y());
  return out;
}

double faltings_delta_elliptic(const UpperHalfPoint& tau, DeltaReading reading,
                               const Precision& prec) {
  const double direct = wentworth_delta(d_ar_elliptic(tau, prec), 1);
  if (reading == DeltaReading::direct) return direct;
  return delta_conversion(direct, 1);
}

EllipticSummary elliptic_summary(const UpperHalfPoint& tau, const Precision& prec) {
  EllipticSummary s;
  s.tau = tau;
  s.arakelov_area = arakelov_area(tau, prec);
  s.arakelov_logdet = arakelov_logdet(tau, prec);
  s.d_ar = d_ar_elliptic(tau, prec);
  s.upper_bound_log = elliptic_upper_bound_log(tau);
  s.upper_bound_log_statement = elliptic_upper_bound_log_statement(tau);
  s.slack = s.upper_bound_log - s.arakelov_logdet;
  return s;
}

}  // namespace atl
