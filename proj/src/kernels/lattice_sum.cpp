#include "atl/kernels/lattice_sum.hpp"

#include <algorithm>
#include <cmath>

#include "atl/kernels/compensated.hpp"

namespace atl::kernels {

double LatticeForm::minimum() const {
  // Q(1, 0) = scale bounds the minimum, so only rows with (n y)^2 <= 1 matter.
  double best = (*this)(1, 0);
  const long rows = std::min<long>(static_cast<long>(1.0 / y) + 1, 1'000'000);
  for (long n = 1; n <= rows; ++n) {
    const long centre = std::lround(-static_cast<double>(n) * x);
    for (long m = centre - 1; m <= centre + 1; ++m) {
      best = std::min(best, (*this)(m, n));
    }
  }
  return best;
}

long max_row(const LatticeForm& form, double qmax) {
  if (!(qmax > 0.0)) return -1;
  return static_cast<long>(std::floor(std::sqrt(qmax / form.scale) / form.y)) + 1;
}

bool row_bounds(const LatticeForm& form, long n, double qmax, long& m_lo, long& m_hi) {
  const double v = static_cast<double>(n) * form.y;
  const double budget = qmax / form.scale - v * v;
  if (budget < 0.0) {
    // Padding still lets a boundary point through if rounding put it just outside.
    if (budget < -1e-12 * (qmax / form.scale)) return false;
  }
  const double r = std::sqrt(std::max(budget, 0.0));
  const double centre = -static_cast<double>(n) * form.x;
  m_lo = static_cast<long>(std::ceil(centre - r)) - 1;
  m_hi = static_cast<long>(std::floor(centre + r)) + 1;
  return true;
}

namespace {

// Visits every (m, n) != (0, 0) of row n with Q <= qmax, in increasing m.
template <class Visit>
void visit_row(const LatticeForm& form, long n, double qmax, Visit&& visit) {
  long m_lo = 0;
  long m_hi = -1;
  if (!row_bounds(form, n, qmax, m_lo, m_hi)) return;
  for (long m = m_lo; m <= m_hi; ++m) {
    if (m == 0 && n == 0) continue;
    const double q = form(m, n);
    if (q <= qmax) visit(q);
  }
}

template <class RowReduce>
double reduce_rows_parallel(const LatticeForm& form, double qmax, RowReduce&& row_value) {
  const long rmax = max_row(form, qmax);
  if (rmax < 0) return 0.0;
  const long rows = 2 * rmax + 1;
  std::vector<double> partial(static_cast<std::size_t>(rows), 0.0);
#pragma omp parallel for schedule(dynamic, 4) if (rows >= kParallelRowThreshold)
  for (long i = 0; i < rows; ++i) {
    partial[static_cast<std::size_t>(i)] = row_value(i - rmax);
  }
  return compensated_total(partial);
}

}  // namespace

namespace serial {

double exp_sum(const LatticeForm& form, double alpha, double qmax) {
  CompensatedSum acc;
  const long rmax = max_row(form, qmax);
  for (long n = -rmax; n <= rmax; ++n) {
    visit_row(form, n, qmax, [&](double q) { acc.add(std::exp(-alpha * q)); });
  }
  return acc.value();
}

double power_sum(const LatticeForm& form, double s, double qmax) {
  CompensatedSum acc;
  const long rmax = max_row(form, qmax);
  for (long n = -rmax; n <= rmax; ++n) {
    visit_row(form, n, qmax, [&](double q) { acc.add(std::pow(q, -s)); });
  }
  return acc.value();
}

std::vector<double> values_below(const LatticeForm& form, double qmax) {
  std::vector<double> out;
  const long rmax = max_row(form, qmax);
  for (long n = -rmax; n <= rmax; ++n) {
    visit_row(form, n, qmax, [&](double q) { out.push_back(q); });
  }
  return out;
}

std::size_t count_below(const LatticeForm& form, double qmax) {
  std::size_t count = 0;
  const long rmax = max_row(form, qmax);
  for (long n = -rmax; n <= rmax; ++n) {
    visit_row(form, n, qmax, [&](double) { ++count; });
  }
  return count;
}

}  // namespace serial

namespace parallel {

double exp_sum(const LatticeForm& form, double alpha, double qmax) {
  return reduce_rows_parallel(form, qmax, [&](long n) {
    CompensatedSum acc;
    visit_row(form, n, qmax, [&](double q) { acc.add(std::exp(-alpha * q)); });
    return acc.value();
  });
}

double power_sum(const LatticeForm& form, double s, double qmax) {
  return reduce_rows_parallel(form, qmax, [&](long n) {
    CompensatedSum acc;
    visit_row(form, n, qmax, [&](double q) { acc.add(std::pow(q, -s)); });
    return acc.value();
  });
}

std::vector<double> values_below(const LatticeForm& form, double qmax) {
  const long rmax = max_row(form, qmax);
  if (rmax < 0) return {};
  const long rows = 2 * rmax + 1;
  std::vector<std::vector<double>> per_row(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(dynamic, 4) if (rows >= kParallelRowThreshold)
  for (long i = 0; i < rows; ++i) {
    auto& bucket = per_row[static_cast<std::size_t>(i)];
    visit_row(form, i - rmax, qmax, [&](double q) { bucket.push_back(q); });
  }
  std::size_t total = 0;
  for (const auto& r : per_row) total += r.size();
  std::vector<double> out;
  out.reserve(total);
  for (const auto& r : per_row) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::size_t count_below(const LatticeForm& form, double qmax) {
  const long rmax = max_row(form, qmax);
  if (rmax < 0) return 0;
  const long rows = 2 * rmax + 1;
  std::size_t count = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : count) if (rows >= kParallelRowThreshold)
  for (long i = 0; i < rows; ++i) {
    visit_row(form, i - rmax, qmax, [&](double) { ++count; });
  }
  return count;
}

}  // namespace parallel

}  // namespace atl::kernels
