#include "atl/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "atl/errors.hpp"
#include "atl/kernels/compensated.hpp"

namespace atl {

namespace {

using constants::pi;
using kernels::CompensatedSum;

constexpr int kMaxReductionSteps = 64;
constexpr int kMaxEmOrder = 20;

// B_{2k} for k = 1..20.
constexpr std::array<double, kMaxEmOrder> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
};

// B_{2k} / (2k)!
double bernoulli_coefficient(int k) {
  double factorial = 1.0;
  for (int i = 2; i <= 2 * k; ++i) factorial *= i;
  return kBernoulli[k - 1] / factorial;
}

std::string describe(const UpperHalfPoint& tau) {
  std::ostringstream os;
  os.precision(17);
  os << "tau = " << tau.x() << " + " << tau.y() << "i";
  return os.str();
}

}  // namespace

UpperHalfPoint::UpperHalfPoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    std::ostringstream os;
    os << "point is not in the upper half-plane: x = " << x << ", y = " << y;
    throw DomainError(os.str());
  }
}

double UpperHalfPoint::abs_q() const { return std::exp(log_abs_q()); }

double UpperHalfPoint::log_abs_q() const { return -2.0 * pi * y_; }

void Precision::validate() const {
  if (!(rel_tol > 0.0) || !(series_tail_tol > 0.0) || !(lattice_tail_tol > 0.0)) {
    throw DomainError("precision tolerances must be strictly positive");
  }
  if (em_order < 2 || em_order > kMaxEmOrder) {
    throw DomainError("em_order must lie in [2, 20]");
  }
  if (em_cutoff < 10) {
    throw DomainError("em_cutoff must be at least 10");
  }
}

UpperHalfPoint ModularTransform::apply(const UpperHalfPoint& tau) const {
  const std::complex<double> z = tau.value();
  const std::complex<double> w =
      (static_cast<double>(a) * z + static_cast<double>(b)) /
      (static_cast<double>(c) * z + static_cast<double>(d));
  return {w.real(), w.imag()};
}

ModularTransform ModularTransform::compose(const ModularTransform& rhs) const {
  return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
          c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

Reduction reduce_to_fundamental_domain(const UpperHalfPoint& tau, const Precision& prec) {
  prec.validate();
  double x = tau.x();
  double y = tau.y();
  ModularTransform m = ModularTransform::identity();

  for (int step = 0; step < kMaxReductionSteps; ++step) {
    const double shift = std::round(x);
    if (shift != 0.0) {
      x -= shift;
      const auto n = static_cast<long long>(shift);
      m = ModularTransform{1, -n, 0, 1}.compose(m);
    }
    const double norm = x * x + y * y;
    if (norm >= 1.0) {
      return {UpperHalfPoint(x, y), m};
    }
    // tau -> -1/tau = -conj(tau) / |tau|^2
    x = -x / norm;
    y = y / norm;
    m = ModularTransform{0, -1, 1, 0}.compose(m);
  }
  throw ConvergenceError("fundamental-domain reduction did not terminate for " + describe(tau));
}

double log_abs_q_product(const UpperHalfPoint& tau, double tail_tol) {
  const double r = tau.abs_q();
  if (r >= 1.0) {
    throw DomainError("q-product requires |q| < 1");
  }
  const double floor = tail_tol * (1.0 - r);
  CompensatedSum sum;
  for (long n = 1;; ++n) {
    const double rn = std::exp(-2.0 * pi * static_cast<double>(n) * tau.y());
    if (rn < floor) break;
    const double theta = 2.0 * pi * static_cast<double>(n) * tau.x();
    // log|1 - r e^{i theta}| = (1/2) log(1 - 2 r cos(theta) + r^2)
    sum.add(0.5 * std::log1p(rn * (rn - 2.0 * std::cos(theta))));
    if (n > 10'000'000) {
      throw ConvergenceError("q-product did not reach its tail tolerance for " + describe(tau));
    }
  }
  return sum.value();
}

double log_abs_eta(const UpperHalfPoint& tau, const Precision& prec) {
  const Reduction red = reduce_to_fundamental_domain(tau, prec);
  const UpperHalfPoint& r = red.point;
  const double reduced = -pi * r.y() / 12.0 + log_abs_q_product(r, prec.series_tail_tol);

  const ModularTransform& m = red.transform;
  const std::complex<double> denom =
      static_cast<double>(m.c) * tau.value() + static_cast<double>(m.d);
  return reduced - 0.5 * std::log(std::abs(denom));
}

double abs_eta(const UpperHalfPoint& tau, const Precision& prec) {
  return std::exp(log_abs_eta(tau, prec));
}

double exp_integral_e1(double x) {
  if (!(x > 0.0) || std::isnan(x)) {
    throw DomainError("E1(x) requires x > 0");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();

  if (x <= 1.0) {
    // -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    CompensatedSum series;
    double power_over_factorial = 1.0;
    for (int k = 1; k < 200; ++k) {
      power_over_factorial *= x / k;
      const double term = power_over_factorial / k;
      series.add(k % 2 == 1 ? term : -term);
      if (term < 0.25 * eps * std::abs(series.value())) break;
    }
    return -constants::euler_gamma - std::log(x) + series.value();
  }

  // Continued fraction e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...))), modified Lentz.
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < eps) {
      return h * std::exp(-x);
    }
  }
  throw ConvergenceError("E1 continued fraction did not converge");
}

namespace {

void check_zeta_argument(double s, const Precision& prec) {
  prec.validate();
  if (!std::isfinite(s) || std::abs(s - 1.0) < 0.1) {
    throw DomainError("zeta(s) requires |s - 1| >= 0.1");
  }
}

}  // namespace

// For s < 0 the direct sum and N^{1-s}/(s-1) cancel to a few parts in N^{1-s};
// both Euler-Maclaurin evaluations therefore run in extended precision.
using Wide = long double;

double zeta_em(double s, const Precision& prec) {
  check_zeta_argument(s, prec);
  const Wide ws = s;
  const Wide n = prec.em_cutoff;

  kernels::BasicCompensatedSum<Wide> sum;
  for (int k = 1; k < prec.em_cutoff; ++k) sum.add(std::pow(static_cast<Wide>(k), -ws));
  sum.add(std::pow(n, 1 - ws) / (ws - 1));
  sum.add(std::pow(n, -ws) / 2);

  // B_{2k}/(2k)! * s (s+1) ... (s+2k-2) * N^{-s-2k+1}
  Wide rising = ws;
  for (int k = 1; k <= prec.em_order; ++k) {
    if (k > 1) rising *= (ws + 2 * k - 3) * (ws + 2 * k - 2);
    sum.add(bernoulli_coefficient(k) * rising * std::pow(n, -ws - 2 * k + 1));
  }
  return static_cast<double>(sum.value());
}

double zeta_em_deriv(double s, const Precision& prec) {
  check_zeta_argument(s, prec);
  const Wide ws = s;
  const Wide n = prec.em_cutoff;
  const Wide log_n = std::log(n);

  kernels::BasicCompensatedSum<Wide> sum;
  for (int k = 2; k < prec.em_cutoff; ++k) {
    const Wide kk = k;
    sum.add(-std::log(kk) * std::pow(kk, -ws));
  }
  const Wide tail = std::pow(n, 1 - ws) / (ws - 1);
  sum.add(-log_n * tail - tail / (ws - 1));
  sum.add(-log_n * std::pow(n, -ws) / 2);

  // d/ds [P_k(s) N^{-s-2k+1}] = (P_k'(s) - ln N P_k(s)) N^{-s-2k+1},
  // P_k(s) = prod_{j=0}^{2k-2} (s + j); P_k' accumulated by the product rule.
  Wide poly = 1;
  Wide poly_deriv = 0;
  int next_factor = 0;
  for (int k = 1; k <= prec.em_order; ++k) {
    for (; next_factor <= 2 * k - 2; ++next_factor) {
      const Wide f = ws + next_factor;
      poly_deriv = poly_deriv * f + poly;
      poly *= f;
    }
    sum.add(bernoulli_coefficient(k) * (poly_deriv - log_n * poly) *
            std::pow(n, -ws - 2 * k + 1));
  }
  return static_cast<double>(sum.value());
}

double zeta_prime_minus1() {
  static const double value = zeta_em_deriv(-1.0, Precision{});
  return value;
}

}  // namespace atl
