#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

namespace frobcalc {

/// How independent per-item work (points, filtration steps, coefficients)
/// is scheduled. Both modes produce identical, index-ordered results; the
/// serial path is the reference the OpenMP path is tested against.
enum class Execution { Serial, Parallel };

namespace kernels {

/// out[i] = f(i) for i in [0, n), in order.
template <class F>
auto map_serial(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

/// out[i] = f(i) computed under OpenMP. An exception thrown by any item is
/// rethrown after the loop; the lowest failing index wins so the error is
/// deterministic.
template <class F>
auto map_parallel(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(f(static_cast<std::size_t>(i)));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <class F>
auto map(Execution mode, std::size_t n, F&& f) {
  return mode == Execution::Parallel ? map_parallel(n, std::forward<F>(f)) : map_serial(n, std::forward<F>(f));
}

}  // namespace kernels
}  // namespace frobcalc
