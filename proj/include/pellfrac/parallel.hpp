#pragma once

// Order-preserving parallel map over an index range, capped by the
// PELLFRAC_THREADS environment variable.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace pellfrac {

/// Worker count: PELLFRAC_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1). A positive `requested` value is clamped
/// to that cap.
inline unsigned thread_cap(unsigned requested = 0) {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PELLFRAC_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) cap = static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return requested > 0 ? std::min(requested, cap) : cap;
}

/// Returns {fn(0), ..., fn(n-1)} computed on up to `threads` workers. Results
/// keep index order; the first exception (by index) is rethrown.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn, unsigned threads) -> std::vector<std::invoke_result_t<Fn, std::size_t>> {
  using R = std::invoke_result_t<Fn, std::size_t>;
  std::vector<R> out(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) {
        try {
          out[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace pellfrac
