#pragma once

#include <exception>
#include <optional>

namespace ennms::kernels {

namespace serial {

template <class R>
std::vector<R> map_indices(std::size_t n, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace serial

namespace parallel {

template <class R>
std::vector<R> map_indices(std::size_t n, const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      slots[idx].emplace(fn(idx));
    } catch (...) {
      errors[idx] = std::current_exception();
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

}  // namespace parallel

}  // namespace ennms::kernels
