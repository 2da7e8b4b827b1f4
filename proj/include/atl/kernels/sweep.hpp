#pragma once

#include <cstddef>
#include <optional>
#include <vector>

// First (or last) integer in [from, to] at which a predicate fails. Used by the genus
// sweeps; the serial version is the reference, the parallel one evaluates all
// candidates concurrently and scans the flags in order.
namespace atl::kernels {

namespace serial {
template <class Predicate>
std::optional<long> first_violation(long from, long to, Predicate&& holds) {
  for (long g = from; g <= to; ++g) {
    if (!holds(g)) return g;
  }
  return std::nullopt;
}

template <class Predicate>
std::optional<long> last_violation(long from, long to, Predicate&& holds) {
  for (long g = to; g >= from; --g) {
    if (!holds(g)) return g;
  }
  return std::nullopt;
}
}  // namespace serial

namespace parallel {
namespace detail {
template <class Predicate>
std::vector<unsigned char> evaluate_flags(long from, long to, Predicate& holds) {
  const long count = to - from + 1;
  std::vector<unsigned char> ok(static_cast<std::size_t>(count), 1);
#pragma omp parallel for schedule(static) if (count >= 1024)
  for (long i = 0; i < count; ++i) {
    ok[static_cast<std::size_t>(i)] = holds(from + i) ? 1 : 0;
  }
  return ok;
}
}  // namespace detail

template <class Predicate>
std::optional<long> first_violation(long from, long to, Predicate&& holds) {
  if (to < from) return std::nullopt;
  const auto ok = detail::evaluate_flags(from, to, holds);
  for (long i = 0; i <= to - from; ++i) {
    if (!ok[static_cast<std::size_t>(i)]) return from + i;
  }
  return std::nullopt;
}

template <class Predicate>
std::optional<long> last_violation(long from, long to, Predicate&& holds) {
  if (to < from) return std::nullopt;
  const auto ok = detail::evaluate_flags(from, to, holds);
  for (long i = to - from; i >= 0; --i) {
    if (!ok[static_cast<std::size_t>(i)]) return from + i;
  }
  return std::nullopt;
}
}  // namespace parallel

}  // namespace atl::kernels
