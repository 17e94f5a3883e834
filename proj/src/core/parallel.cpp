#include "displace/core/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace displace {

std::optional<std::uint64_t> parallel_first_index(std::uint64_t count, unsigned jobs,
                                                  const std::function<bool(std::uint64_t)>& predicate) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  if (count == 0) return std::nullopt;
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (predicate(i)) return i;
    return std::nullopt;
  }

  const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (static_cast<std::uint64_t>(jobs) * 16));
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> best{kNone};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        std::uint64_t start = next_chunk.fetch_add(chunk);
        if (start >= count || start >= best.load()) return;
        std::uint64_t stop = std::min(count, start + chunk);
        for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
          if (predicate(i)) {
            std::uint64_t current = best.load();
            while (i < current && !best.compare_exchange_weak(current, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::uint64_t hit = best.load();
  if (hit == kNone) return std::nullopt;
  return hit;
}

}  // namespace displace
