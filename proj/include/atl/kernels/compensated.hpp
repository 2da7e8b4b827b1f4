#pragma once

#include <cmath>
#include <span>

namespace atl::kernels {

// Neumaier's variant of Kahan summation. Order-dependent but deterministic.
template <class T>
class BasicCompensatedSum {
 public:
  void add(T v) {
    const T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  BasicCompensatedSum& operator+=(T v) {
    add(v);
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

using CompensatedSum = BasicCompensatedSum<double>;

inline double compensated_total(std::span<const double> values) {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

}  // namespace atl::kernels
