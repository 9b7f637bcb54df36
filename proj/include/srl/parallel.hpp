#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace srl {

namespace detail {
inline std::atomic<std::size_t>& job_limit() {
  static std::atomic<std::size_t> n{1};
  return n;
}
}  // namespace detail

/// Caps the worker threads used by library sweeps (0 = hardware threads).
inline void set_max_jobs(std::size_t n) {
  if (n == 0) n = std::max(1U, std::thread::hardware_concurrency());
  detail::job_limit() = n;
}
inline std::size_t max_jobs() { return detail::job_limit(); }

/// Computes f(0..n-1) on up to max_jobs() threads; results come back in
/// index order. The first exception (by index) is rethrown.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<std::optional<R>> out(n);
  auto unwrap = [&] {
    std::vector<R> res;
    res.reserve(n);
    for (auto& r : out) res.push_back(std::move(*r));
    return res;
  };
  std::size_t jobs = std::min(max_jobs(), n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i].emplace(f(i));
    return unwrap();
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          out[i].emplace(f(i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return unwrap();
}

}  // namespace srl
