#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace domcrit {

// Applies fn to every item and returns results in input order, so aggregate
// output is identical for any worker count. Exceptions from workers are
// rethrown after all threads join.
template <typename Out, typename In, typename Fn>
std::vector<Out> parallel_map(const std::vector<In>& items, int workers, Fn fn) {
  std::vector<Out> results(items.size());
  if (workers <= 1 || items.size() <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= items.size()) return;
          results[i] = fn(items[i]);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace domcrit
