#pragma once

#include <complex>
#include <numbers>

namespace atl {

namespace constants {
inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double log_two = std::numbers::ln2;
// log(2*pi)
inline constexpr double log_two_pi = 1.8378770664093454835606594728112;
// log(2*pi^4) = log 2 + 4 log pi
inline constexpr double log_two_pi4 = 5.2720667239575460059909415268645;
}  // namespace constants

// Point tau = x + iy of the upper half-plane. Construction rejects y <= 0.
class UpperHalfPoint {
 public:
  UpperHalfPoint(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }
  std::complex<double> value() const { return {x_, y_}; }

  // |q| with q = exp(2 pi i tau); log|q| = -2 pi y.
  double abs_q() const;
  double log_abs_q() const;

  friend bool operator==(const UpperHalfPoint&, const UpperHalfPoint&) = default;

 private:
  double x_;
  double y_;
};

// Numeric-control record shared by every kernel.
struct Precision {
  double rel_tol = 1e-12;
  double series_tail_tol = 1e-16;
  int em_cutoff = 50;  // Euler-Maclaurin direct-sum length
  int em_order = 8;    // number of Bernoulli correction terms
  double lattice_tail_tol = 1e-18;

  // Throws DomainError if any field is out of range.
  void validate() const;

  friend bool operator==(const Precision&, const Precision&) = default;
};

// Unimodular integer matrix [[a, b], [c, d]] acting by tau -> (a tau + b) / (c tau + d).
struct ModularTransform {
  long long a = 1;
  long long b = 0;
  long long c = 0;
  long long d = 1;

  static ModularTransform identity() { return {}; }

  long long determinant() const { return a * d - b * c; }
  UpperHalfPoint apply(const UpperHalfPoint& tau) const;
  // this * rhs
  ModularTransform compose(const ModularTransform& rhs) const;

  friend bool operator==(const ModularTransform&, const ModularTransform&) = default;
};

struct Reduction {
  UpperHalfPoint point;
  ModularTransform transform;  // transform.apply(input) == point
};

// Maps tau into |x| <= 1/2, |tau| >= 1 by unit shifts and tau -> -1/tau.
// Throws ConvergenceError after 64 iterations.
Reduction reduce_to_fundamental_domain(const UpperHalfPoint& tau, const Precision& prec = {});

// log|eta(tau)|, evaluated on the reduced point and pulled back with |c tau + d|^(-1/2).
double log_abs_eta(const UpperHalfPoint& tau, const Precision& prec = {});
double abs_eta(const UpperHalfPoint& tau, const Precision& prec = {});

// sum_{n>=1} log|1 - q^n| evaluated directly at tau without reduction. Terms are
// added until |q|^n / (1 - |q|) < tail_tol. Only sensible for |q| well below 1.
double log_abs_q_product(const UpperHalfPoint& tau, double tail_tol = 1e-16);

// Exponential integral E1(x) = int_x^inf e^-u / u du, x > 0.
double exp_integral_e1(double x);

// Riemann zeta and its s-derivative by Euler-Maclaurin summation, |s - 1| >= 0.1.
double zeta_em(double s, const Precision& prec = {});
double zeta_em_deriv(double s, const Precision& prec = {});

// zeta'(-1) at default precision, computed once.
double zeta_prime_minus1();

}  // namespace atl
