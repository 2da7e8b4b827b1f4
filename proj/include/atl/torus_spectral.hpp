#pragma once

#include <cstddef>
#include <vector>

#include "atl/kernels/lattice_sum.hpp"
#include "atl/numerics.hpp"

namespace atl {

// Below this (effective) time the heat trace is evaluated in its Poisson-dual form.
inline constexpr double kPoissonSwitch = 0.2;
inline constexpr std::size_t kDefaultMaxEigenvalues = 20'000'000;

// Flat torus R^2 / L with L = (gamma / sqrt(y)) (Z + tau Z). With gamma = 1 the
// lattice has unit covolume and the Laplacian spectrum is
//   lambda_{m,n} = 4 pi^2 |m + n tau|^2 / y,  (m, n) != (0, 0).
// A metric scale gamma (g -> gamma^2 g) divides every eigenvalue by gamma^2 and
// multiplies the area by gamma^2.
class FlatTorus {
 public:
  explicit FlatTorus(UpperHalfPoint tau, double metric_scale = 1.0);

  const UpperHalfPoint& tau() const { return tau_; }
  double metric_scale() const { return gamma_; }
  double area() const { return gamma_ * gamma_; }

  // Q(m, n) = lambda_{m,n}
  kernels::LatticeForm spectral_form() const;
  // Q(m, n) = |l|^2 for l = (gamma / sqrt(y)) (m + n tau) in L
  kernels::LatticeForm lattice_form() const;

 private:
  UpperHalfPoint tau_;
  double gamma_;
};

struct Eigenvalue {
  double value = 0.0;
  int multiplicity = 0;
};

// Nonzero eigenvalues <= cutoff, ascending, with multiplicities. Values that agree
// to 1e-10 relative are merged. Throws CapacityError beyond max_count entries
// (counted with multiplicity).
std::vector<Eigenvalue> eigenvalues_below(const FlatTorus& torus, double cutoff,
                                          std::size_t max_count = kDefaultMaxEigenvalues);

// #{lambda <= cutoff}, counted with multiplicity.
std::size_t count_eigenvalues_below(const FlatTorus& torus, double cutoff);

// Theta(t) = 1 + sum' exp(-lambda t), kernel included. Direct lattice sum for
// t / gamma^2 >= kPoissonSwitch, Poisson-dual sum below.
double heat_trace(const FlatTorus& torus, double t, const Precision& prec = {});
// Both representations, valid for every t > 0 (cost grows away from the switch).
double heat_trace_direct(const FlatTorus& torus, double t, const Precision& prec = {});
double heat_trace_poisson(const FlatTorus& torus, double t, const Precision& prec = {});

// Spectral zeta function continued through the Mellin split at t = 1:
//   zeta(s) Gamma(s) = A / (4 pi (s - 1)) - 1/s + H(s).
// Requires |s - 1| >= 0.05.
double spectral_zeta(const FlatTorus& torus, double s, const Precision& prec = {});

// sum_{lambda <= cutoff} lambda^{-s} + Weyl tail A cutoff^{1-s} / (4 pi (s - 1)); s > 1.
double spectral_zeta_direct(const FlatTorus& torus, double s, double cutoff);

// -zeta'(0) from the Mellin split; never touches eta.
double logdet_oracle(const FlatTorus& torus, const Precision& prec = {});

// log(y |eta(tau)|^4), the unit-area closed form.
double logdet_closed(const UpperHalfPoint& tau, const Precision& prec = {});

// log det under g -> gamma^2 g.
double scaled_logdet(double base_logdet, double gamma);

struct DetComparison {
  UpperHalfPoint tau{0.0, 1.0};
  double logdet_closed = 0.0;
  double logdet_oracle = 0.0;
  double difference = 0.0;  // oracle - closed

  friend bool operator==(const DetComparison&, const DetComparison&) = default;
};

DetComparison compare_logdet(const UpperHalfPoint& tau, const Precision& prec = {});

}  // namespace atl
