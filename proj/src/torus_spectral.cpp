#include "atl/torus_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "atl/errors.hpp"
#include "atl/quadrature.hpp"

namespace atl {

namespace {

using constants::pi;
namespace par = kernels::parallel;

// Extra e-folds kept beyond the tail tolerance when choosing lattice cutoffs.
constexpr double kTailMargin = 5.0;

double tail_budget(const Precision& prec) {
  return -std::log(prec.lattice_tail_tol) + kTailMargin;
}

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("heat trace requires t > 0");
  }
}

// sum' exp(-lambda t), direct in the spectrum.
double direct_sum(const FlatTorus& torus, double t, const Precision& prec) {
  const double density = torus.area() / (4.0 * pi * t);
  const double qmax = (tail_budget(prec) + std::log1p(density)) / t;
  return par::exp_sum(torus.spectral_form(), t, qmax);
}

// Theta(t) - A / (4 pi t) = (A / (4 pi t)) sum'_{l in L} exp(-|l|^2 / (4t)).
double poisson_remainder(const FlatTorus& torus, double t, const Precision& prec) {
  const double qmax = 4.0 * t * tail_budget(prec);
  const double sum = par::exp_sum(torus.lattice_form(), 1.0 / (4.0 * t), qmax);
  return torus.area() / (4.0 * pi * t) * sum;
}

bool use_poisson(const FlatTorus& torus, double t) {
  return t / torus.area() < kPoissonSwitch;
}

// Theta(t) - A / (4 pi t), the integrand on (0, 1].
double small_time_remainder(const FlatTorus& torus, double t, const Precision& prec) {
  if (use_poisson(torus, t)) return poisson_remainder(torus, t, prec);
  return 1.0 + direct_sum(torus, t, prec) - torus.area() / (4.0 * pi * t);
}

// Theta(t) - 1, the integrand on [1, inf).
double large_time_remainder(const FlatTorus& torus, double t, const Precision& prec) {
  if (!use_poisson(torus, t)) return direct_sum(torus, t, prec);
  return poisson_remainder(torus, t, prec) + torus.area() / (4.0 * pi * t) - 1.0;
}

// 1 / Gamma(s), exact zero at the poles.
double reciprocal_gamma(double s) {
  if (s <= 0.0 && s == std::floor(s)) return 0.0;
  return 1.0 / std::tgamma(s);
}

// H(s) = int_0^1 t^{s-1} (Theta - A/(4 pi t)) dt + int_1^inf t^{s-1} (Theta - 1) dt.
double mellin_regular_part(const FlatTorus& torus, double s, const Precision& prec) {
  const double tol = prec.rel_tol;
  // Pieces that are tiny in absolute terms (the exponentially small Poisson
  // remainder, far tail panels) are judged against the O(1) scale of H(s).
  constexpr double scale = 1.0;

  auto small = [&](double t) {
    return std::pow(t, s - 1.0) * small_time_remainder(torus, t, prec);
  };
  auto large = [&](double t) {
    return std::pow(t, s - 1.0) * large_time_remainder(torus, t, prec);
  };

  double head = 0.0;
  const double t_switch = kPoissonSwitch * torus.area();
  if (t_switch < 1.0) {
    head = integrate_adaptive(small, 0.0, t_switch, tol, scale).value +
           integrate_adaptive(small, t_switch, 1.0, tol, scale).value;
  } else {
    head = integrate_adaptive(small, 0.0, 1.0, tol, scale).value;
  }

  // Theta - 1 ~ mult * exp(-lambda_1 t); stop once the integrand is far below tolerance.
  const double lambda1 = torus.spectral_form().minimum();
  const double budget = tail_budget(prec) + std::log(16.0);
  double upper = 1.0 + budget / lambda1;
  for (int i = 0; i < 8; ++i) {
    upper = 1.0 + (budget + std::max(0.0, s - 1.0) * std::log(upper)) / lambda1;
  }
  // Panels of a few decay lengths keep the adaptive scheme from skipping the bulk.
  const double panel = std::max(4.0 / lambda1, (upper - 1.0) / 64.0);
  double tail = 0.0;
  for (double a = 1.0; a < upper; a += panel) {
    tail += integrate_adaptive(large, a, std::min(a + panel, upper), tol, scale).value;
  }
  return head + tail;
}

void check_zeta_argument(double s) {
  if (!std::isfinite(s) || std::abs(s - 1.0) < 0.05) {
    throw DomainError("spectral zeta requires |s - 1| >= 0.05");
  }
}

}  // namespace

FlatTorus::FlatTorus(UpperHalfPoint tau, double metric_scale) : tau_(tau), gamma_(metric_scale) {
  if (!(metric_scale > 0.0) || !std::isfinite(metric_scale)) {
    throw DomainError("metric scale must be positive");
  }
}

kernels::LatticeForm FlatTorus::spectral_form() const {
  return {tau_.x(), tau_.y(), 4.0 * pi * pi / (tau_.y() * area())};
}

kernels::LatticeForm FlatTorus::lattice_form() const {
  return {tau_.x(), tau_.y(), area() / tau_.y()};
}

std::size_t count_eigenvalues_below(const FlatTorus& torus, double cutoff) {
  if (!(cutoff > 0.0)) throw DomainError("eigenvalue cutoff must be positive");
  return par::count_below(torus.spectral_form(), cutoff);
}

std::vector<Eigenvalue> eigenvalues_below(const FlatTorus& torus, double cutoff,
                                          std::size_t max_count) {
  if (!(cutoff > 0.0)) throw DomainError("eigenvalue cutoff must be positive");
  const auto form = torus.spectral_form();

  // Padded row widths bound the count from above in O(rows).
  double bound = 0.0;
  const long rmax = kernels::max_row(form, cutoff);
  for (long n = -rmax; n <= rmax; ++n) {
    long lo = 0;
    long hi = -1;
    if (kernels::row_bounds(form, n, cutoff, lo, hi)) bound += static_cast<double>(hi - lo + 1);
  }
  if (bound > static_cast<double>(max_count) &&
      par::count_below(form, cutoff) > max_count) {
    std::ostringstream os;
    os << "more than " << max_count << " eigenvalues below " << cutoff;
    throw CapacityError(os.str());
  }

  std::vector<double> values = par::values_below(form, cutoff);
  std::sort(values.begin(), values.end());

  std::vector<Eigenvalue> out;
  for (double v : values) {
    if (!out.empty() && v - out.back().value <= 1e-10 * out.back().value) {
      ++out.back().multiplicity;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

double heat_trace_direct(const FlatTorus& torus, double t, const Precision& prec) {
  check_time(t);
  prec.validate();
  return 1.0 + direct_sum(torus, t, prec);
}

double heat_trace_poisson(const FlatTorus& torus, double t, const Precision& prec) {
  check_time(t);
  prec.validate();
  return torus.area() / (4.0 * pi * t) + poisson_remainder(torus, t, prec);
}

double heat_trace(const FlatTorus& torus, double t, const Precision& prec) {
  if (use_poisson(torus, t)) return heat_trace_poisson(torus, t, prec);
  return heat_trace_direct(torus, t, prec);
}

double spectral_zeta(const FlatTorus& torus, double s, const Precision& prec) {
  check_zeta_argument(s);
  prec.validate();
  const double h = mellin_regular_part(torus, s, prec);
  // zeta(s) = (A/(4 pi (s-1)) + H(s)) / Gamma(s) - 1 / Gamma(s + 1)
  return reciprocal_gamma(s) * (torus.area() / (4.0 * pi * (s - 1.0)) + h) -
         reciprocal_gamma(s + 1.0);
}

double spectral_zeta_direct(const FlatTorus& torus, double s, double cutoff) {
  if (!(s > 1.0)) throw DomainError("direct spectral zeta requires s > 1");
  if (!(cutoff > 0.0)) throw DomainError("eigenvalue cutoff must be positive");
  const double head = par::power_sum(torus.spectral_form(), s, cutoff);
  return head + torus.area() * std::pow(cutoff, 1.0 - s) / (4.0 * pi * (s - 1.0));
}

double logdet_oracle(const FlatTorus& torus, const Precision& prec) {
  prec.validate();
  // 1/Gamma(s) = s + gamma_E s^2 + O(s^3) gives
  //   zeta'(0) = -A/(4 pi) + H(0) - gamma_E.
  const double h0 = mellin_regular_part(torus, 0.0, prec);
  return torus.area() / (4.0 * pi) - h0 + constants::euler_gamma;
}

double logdet_closed(const UpperHalfPoint& tau, const Precision& prec) {
  return std::log(tau.y()) + 4.0 * log_abs_eta(tau, prec);
}

double scaled_logdet(double base_logdet, double gamma) {
  if (!(gamma > 0.0)) throw DomainError("scaling factor must be positive");
  return base_logdet + 2.0 * std::log(gamma);
}

DetComparison compare_logdet(const UpperHalfPoint& tau, const Precision& prec) {
  const double closed = logdet_closed(tau, prec);
  const double oracle = logdet_oracle(FlatTorus(tau), prec);
  return {tau, closed, oracle, oracle - closed};
}

}  // namespace atl
