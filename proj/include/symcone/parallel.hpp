#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace symcone {

/// Worker count from SYMCONE_THREADS; 1 when unset or unparsable.
inline std::size_t thread_count_from_env() {
  const char* raw = std::getenv("SYMCONE_THREADS");
  if (raw == nullptr) {
    return 1;
  }
  try {
    const long value = std::stol(raw);
    return value > 0 ? static_cast<std::size_t>(value) : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

/// results[i] = f(i) for i < count, computed on up to `threads` workers.
/// Output order is by index; the exception of the lowest failing index is
/// rethrown.
template <class F>
auto parallel_map(std::size_t count, std::size_t threads, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using T = decltype(f(std::size_t{}));
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      slots[i].emplace(f(i));
    }
  } else {
    std::mutex m;
    std::size_t next = 0;
    auto work = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(m);
          if (next == count) {
            return;
          }
          i = next++;
        }
        try {
          slots[i].emplace(f(i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back(work);
    }
    for (auto& t : pool) {
      t.join();
    }
    for (const auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

} // namespace symcone
