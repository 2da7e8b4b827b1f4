#pragma once

#include <cstddef>
#include <vector>

// Sums over the punctured integer lattice Z^2 \ {0} weighted by a positive
// definite binary quadratic form. Every kernel comes in two flavours:
//
//   serial::   plain nested loop with a single compensated accumulator; kept as
//              the reference implementation for tests and benchmarks.
//   parallel:: OpenMP over lattice rows. Each row is reduced into its own slot
//              and the slots are combined in row order, so the result does not
//              depend on the thread count.
namespace atl::kernels {

// Q(m, n) = scale * ((m + n x)^2 + (n y)^2), y > 0, scale > 0.
struct LatticeForm {
  double x = 0.0;
  double y = 1.0;
  double scale = 1.0;

  double operator()(long m, long n) const {
    const double u = static_cast<double>(m) + static_cast<double>(n) * x;
    const double v = static_cast<double>(n) * y;
    return scale * (u * u + v * v);
  }

  // Smallest nonzero value of Q.
  double minimum() const;
};

// Largest |n| for which some m has Q(m, n) <= qmax.
long max_row(const LatticeForm& form, double qmax);

// Candidate m-range of row n; the range is padded by one on both sides and the
// caller must still test Q(m, n) <= qmax. Returns false if the row is empty.
bool row_bounds(const LatticeForm& form, long n, double qmax, long& m_lo, long& m_hi);

// Rows at or above this count switch the parallel kernels to multiple threads.
inline constexpr long kParallelRowThreshold = 64;

namespace serial {
// sum' exp(-alpha Q) over Q <= qmax
double exp_sum(const LatticeForm& form, double alpha, double qmax);
// sum' Q^{-s} over Q <= qmax
double power_sum(const LatticeForm& form, double s, double qmax);
std::vector<double> values_below(const LatticeForm& form, double qmax);
std::size_t count_below(const LatticeForm& form, double qmax);
}  // namespace serial

namespace parallel {
double exp_sum(const LatticeForm& form, double alpha, double qmax);
double power_sum(const LatticeForm& form, double s, double qmax);
std::vector<double> values_below(const LatticeForm& form, double qmax);
std::size_t count_below(const LatticeForm& form, double qmax);
}  // namespace parallel

}  // namespace atl::kernels
