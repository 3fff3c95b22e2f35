#pragma once

#include <cstddef>
#include <vector>

namespace rqnn {

// Execution mode for batch kernels. `serial` is the reference
// implementation; `parallel` runs the same per-index work under OpenMP.
// Both modes produce bit-identical results: slots are independent and
// reductions happen in index order after the parallel fill.
enum class ExecMode { serial, parallel };

// out[i] = fn(i) for i in [0, count). fn must only write its own slot.
template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t count, ExecMode mode, Fn&& fn) {
  std::vector<T> out(count);
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
#else
    mode = ExecMode::serial;
#endif
  }
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

// Sum of fn(i) accumulated in index order (same rounding in both modes).
template <typename Fn>
double sum_indexed(std::size_t count, ExecMode mode, Fn&& fn) {
  if (mode == ExecMode::serial) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += fn(i);
    return s;
  }
  auto vals = map_indexed<double>(count, mode, fn);
  double s = 0.0;
  for (double v : vals) s += v;
  return s;
}

// Max of fn(i) over [0, count); exact, so reduction order is irrelevant.
template <typename Fn>
double max_indexed(std::size_t count, ExecMode mode, Fn&& fn) {
  auto vals = map_indexed<double>(count, mode, fn);
  double m = vals.empty() ? 0.0 : vals[0];
  for (double v : vals) m = v > m ? v : m;
  return m;
}

}  // namespace rqnn
